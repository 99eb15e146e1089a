"""Fraction-free elimination kernels on integer matrices, pure Python.

These three functions are the innermost loops of every exact computation in
this package: exhaustive partition scans, pivoting runs, and rank tests all
bottom out here.  A Cython twin (``tvpm._kernel``) implements the same
contract; ``tvpm.kernel`` picks one at import time.

All matrices are row-major lists of Python ints.  Elimination uses the
one-step fraction-free scheme: every 2x2 cross-multiplication is divided by
the previous pivot, and that division is always exact (the intermediate
entries are minors of the input), which keeps entry growth polynomial
instead of exponential.
"""

BACKEND = "python"


def ff_det(rows):
    """Determinant of a square integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
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
    return sign * a[n - 1][n - 1]


def ff_solve(rows, rhs):
    """Solve a square integer system A x = b exactly.

    Returns ``(det, nums)`` with ``x[i] = nums[i] / det`` (det is the
    determinant of A, nonzero), or ``None`` when A is singular.
    """
    n = len(rows)
    if n == 0:
        return 1, []
    a = [list(rows[i]) + [rhs[i]] for i in range(n)]
    sign = 1
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
    # Back substitution scaled by the last pivot: nums[i] = den * x[i] is an
    # integer (Cramer), and the division by the diagonal entry is exact.
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
    m = len(rows)
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
