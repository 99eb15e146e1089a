# cython: language_level=3
"""Fraction-free elimination kernels, compiled variant.

Same contract as tvpm._kernel_py: ff_det, ff_solve, ff_rank on row-major
lists of Python ints.  Entries stay arbitrary-precision integers (exactness
is the whole point), so the speedup over the pure twin comes from compiled
loop and indexing overhead, not from native arithmetic.
"""

BACKEND = "cython"


def ff_det(rows):
    """Determinant of a square integer matrix."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k, p
    cdef int sign = 1
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    prev = 1
    for k in range(n - 1):
        p = k
        while p < n and a[p][k] == 0:
            p += 1
        if p == n:
            return 0
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        ak = a[k]
        piv = ak[k]
        for i in range(k + 1, n):
            ai = a[i]
            f = ai[k]
            if f:
                for j in range(k + 1, n):
                    ai[j] = (piv * ai[j] - f * ak[j]) // prev
            elif prev != piv:
                for j in range(k + 1, n):
                    ai[j] = piv * ai[j] // prev
            ai[k] = 0
        prev = piv
    if sign < 0:
        return -a[n - 1][n - 1]
    return a[n - 1][n - 1]


def ff_solve(rows, rhs):
    """Solve a square integer system A x = b exactly.

    Returns ``(det, nums)`` with ``x[i] = nums[i] / det``, or ``None`` when
    A is singular.
    """
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k, p
    cdef int sign = 1
    if n == 0:
        return 1, []
    a = [list(rows[i]) + [rhs[i]] for i in range(n)]
    prev = 1
    for k in range(n):
        p = k
        while p < n and a[p][k] == 0:
            p += 1
        if p == n:
            return None
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        if k == n - 1:
            break
        ak = a[k]
        piv = ak[k]
        for i in range(k + 1, n):
            ai = a[i]
            f = ai[k]
            if f:
                for j in range(k + 1, n + 1):
                    ai[j] = (piv * ai[j] - f * ak[j]) // prev
            elif prev != piv:
                for j in range(k + 1, n + 1):
                    ai[j] = piv * ai[j] // prev
            ai[k] = 0
        prev = piv
    den = a[n - 1][n - 1]
    nums = [0] * n
    nums[n - 1] = a[n - 1][n]
    for k in range(n - 2, -1, -1):
        ak = a[k]
        s = ak[n] * den
        for j in range(k + 1, n):
            s -= ak[j] * nums[j]
        nums[k] = s // ak[k]
    if sign < 0:
        return -den, [-v for v in nums]
    return den, nums


def ff_rank(rows):
    """Rank of a rectangular integer matrix."""
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t i, j, p, col, row
    cdef Py_ssize_t n, rank
    if m == 0:
        return 0
    n = len(rows[0])
    a = [list(r) for r in rows]
    prev = 1
    rank = 0
    row = 0
    for col in range(n):
        if row == m:
            break
        p = row
        while p < m and a[p][col] == 0:
            p += 1
        if p == m:
            continue
        if p != row:
            a[row], a[p] = a[p], a[row]
        ar = a[row]
        piv = ar[col]
        for i in range(row + 1, m):
            ai = a[i]
            f = ai[col]
            if f:
                for j in range(col + 1, n):
                    ai[j] = (piv * ai[j] - f * ar[j]) // prev
            elif prev != piv:
                for j in range(col + 1, n):
                    ai[j] = piv * ai[j] // prev
            ai[col] = 0
        prev = piv
        rank += 1
        row += 1
    return rank
