"""Exact linear-programming feasibility over the rationals.

Phase-1 simplex with Bland's anti-cycling rule on a dense Fraction
tableau.  Solves "does A x = b admit x >= 0", returning either a feasible
x or a Farkas vector y with y^T A <= 0 and y^T b > 0.  The separation test
builds on the infeasible branch: y restricted to the right coordinates is
a separating functional for two convex hulls.
"""

from fractions import Fraction


def feasible_point(rows, rhs):
    """Find x >= 0 with A x = b, exactly.

    Returns ``("feasible", x)`` or ``("infeasible", y)`` where y satisfies
    y^T A <= 0 componentwise and y^T b > 0.
    """
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    zero, one = Fraction(0), Fraction(1)
    flipped = []
    t = []
    for row, bi in zip(rows, rhs):
        if bi < 0:
            t.append([-v for v in row])
            flipped.append(True)
        else:
            t.append(list(row))
            flipped.append(False)
    b = [abs(bi) for bi in rhs]
    total = ncols + m
    # Tableau rows: structural columns, artificial identity, rhs.
    for i in range(m):
        t[i].extend(one if j == i else zero for j in range(m))
        t[i].append(b[i])
    basis = list(range(ncols, total))
    # Reduced-cost row for minimizing the sum of artificials; the basic
    # artificial columns start reduced to zero.
    cost = [zero] * (total + 1)
    for j in range(ncols):
        cost[j] = -sum(t[i][j] for i in range(m))
    cost[total] = -sum(b)
    while True:
        enter = None
        for j in range(total):
            if cost[j] < 0:
                enter = j
                break
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if t[i][enter] > 0:
                ratio = t[i][total] / t[i][enter]
                if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            raise AssertionError("phase-1 objective is bounded below by 0")
        piv = t[leave][enter]
        t[leave] = [v / piv for v in t[leave]]
        for i in range(m):
            if i != leave and t[i][enter] != 0:
                f = t[i][enter]
                t[i] = [v - f * w for v, w in zip(t[i], t[leave])]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [v - f * w for v, w in zip(cost, t[leave])]
        basis[leave] = enter
    objective = -cost[total]
    if objective == 0:
        x = [zero] * ncols
        for i, bv in enumerate(basis):
            if bv < ncols:
                x[bv] = t[i][total]
        return "feasible", tuple(x)
    # Farkas vector from the final reduced costs of the artificial
    # columns: y_i = 1 - cost[ncols + i], flipped back per row.
    y = []
    for i in range(m):
        yi = one - cost[ncols + i]
        y.append(-yi if flipped[i] else yi)
    return "infeasible", tuple(y)
