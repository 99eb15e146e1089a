"""Exact rational vectors and matrices.

Scalars are ``fractions.Fraction`` (always lowest terms, positive
denominator).  Vectors are tuples of Fractions, matrices are lists of row
lists.  Determinant, rank, and linear solving clear denominators row by row
and run on the integer fraction-free kernels from ``tvpm.kernel``; row
scaling changes the determinant by a known factor and changes neither rank
nor solutions, so everything stays exact.

Rational literal syntax used on every interface of this package: "p" or
"p/q" with decimal integers and q > 0.  No floating point anywhere.
"""

import re
from fractions import Fraction
from math import lcm

from tvpm.kernel import ff_det, ff_rank, ff_solve

Rat = Fraction

_RAT_RE = re.compile(r"[+-]?[0-9]+(?:/[0-9]+)?")


def parse_rat(s):
    """Parse "p" or "p/q" (q > 0) into a Fraction."""
    if not isinstance(s, str) or not _RAT_RE.fullmatch(s):
        raise ValueError("not a rational literal: %r" % (s,))
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError("zero denominator: %r" % (s,))
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rat(x):
    """Render a Fraction as "p" or "p/q"."""
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_vec(items):
    return tuple(parse_rat(s) for s in items)


def format_vec(v):
    return [format_rat(x) for x in v]


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v):
    return tuple(c * a for a in v)


def vneg(v):
    return tuple(-a for a in v)


def vdot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vzero(dim):
    return (Fraction(0),) * dim


def is_zero_vec(v):
    return all(a == 0 for a in v)


def tensor(u, b):
    """Tensor (outer) product flattened row-major: entry (i,j) is u_i*b_j."""
    return tuple(ui * bj for ui in u for bj in b)


def mat_vec(m, v):
    return tuple(vdot(tuple(row), v) for row in m)


def _clear_row(row):
    # Scale a Fraction row to integers; returns (int row, multiplier used).
    s = lcm(*(x.denominator for x in row)) if row else 1
    return [int(x * s) for x in row], s


def det(rows):
    """Exact determinant of a square Fraction matrix."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    if n == 0:
        return Fraction(1)
    int_rows = []
    scale = 1
    for r in rows:
        ir, s = _clear_row(r)
        int_rows.append(ir)
        scale *= s
    return Fraction(ff_det(int_rows), scale)


def rank(rows):
    """Exact rank of a rectangular Fraction matrix."""
    if not rows:
        return 0
    return ff_rank([_clear_row(r)[0] for r in rows])


def solve_linear(rows, rhs):
    """Solve a square Fraction system exactly.

    Returns ``(x, det)`` with det nonzero, or ``None`` when singular.
    """
    n = len(rows)
    if any(len(r) != n for r in rows) or len(rhs) != n:
        raise ValueError("dimension mismatch")
    int_rows = []
    int_rhs = []
    scale = 1
    for row, b in zip(rows, rhs):
        ir, s = _clear_row(list(row) + [b])
        int_rows.append(ir[:n])
        int_rhs.append(ir[n])
        scale *= s
    got = ff_solve(int_rows, int_rhs)
    if got is None:
        return None
    den, nums = got
    x = tuple(Fraction(v, den) for v in nums)
    return x, Fraction(den, scale)


def solve_general(rows, rhs):
    """Solve a rectangular Fraction system by Gauss-Jordan elimination.

    Returns ``("inconsistent", None)``, ``("unique", x)``, or
    ``("underdetermined", x)`` where x is one exact solution (free
    variables set to zero).
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [list(rows[i]) + [rhs[i]] for i in range(m)]
    pivots = []
    row = 0
    for col in range(n):
        p = None
        for i in range(row, m):
            if a[i][col] != 0:
                p = i
                break
        if p is None:
            continue
        a[row], a[p] = a[p], a[row]
        inv = 1 / a[row][col]
        a[row] = [v * inv for v in a[row]]
        for i in range(m):
            if i != row and a[i][col] != 0:
                f = a[i][col]
                a[i] = [v - f * w for v, w in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for i in range(row, m):
        if a[i][n] != 0:
            return "inconsistent", None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = a[i][n]
    kind = "unique" if len(pivots) == n else "underdetermined"
    return kind, tuple(x)
