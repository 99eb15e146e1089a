"""Exact minimum-norm point in a convex hull of rational points.

Active-set (Wolfe-style) method over corrals: affinely independent
subsets whose affine minimizer has strictly positive weights.  All
arithmetic is rational, so the result is the exact closest point to the
origin, together with its convex weights.

``min_norm_point_naive`` projects onto every affinely independent subset
and keeps the best hull-feasible candidate; it is exponential and exists
as the independent oracle for the fast routine.
"""

from fractions import Fraction
from itertools import combinations

from tvpm.linalg import solve_linear, vadd, vdot, vscale, vzero


def affine_minimizer(points):
    """Minimum-norm point of the affine hull of the given points.

    Returns ``(x, weights)`` with weights summing to 1 (signs free), or
    None when the points are affinely dependent.  Solves the bordered
    Gram system: stationarity of |sum w_i p_i|^2 under sum w_i = 1.
    """
    k = len(points)
    one, zero = Fraction(1), Fraction(0)
    rows = [[2 * vdot(p, q) for q in points] + [one] for p in points]
    rows.append([one] * k + [zero])
    rhs = [zero] * k + [one]
    got = solve_linear(rows, rhs)
    if got is None:
        return None
    lam = got[0][:k]
    x = vzero(len(points[0]))
    for w, p in zip(lam, points):
        x = vadd(x, vscale(w, p))
    return x, lam


def min_norm_point(points):
    """Exact minimum-norm point of conv(points).

    Returns ``(w, weights)`` where weights is a dict {point index:
    positive Fraction} over an affinely independent support with
    sum(weights) = 1 and w = sum weights[i] * points[i].
    """
    if not points:
        raise ValueError("need at least one point")
    start = min(range(len(points)), key=lambda i: (vdot(points[i], points[i]), i))
    support = [start]
    lam = {start: Fraction(1)}
    x = points[start]
    prev_normsq = None
    while True:
        normsq = vdot(x, x)
        if prev_normsq is not None and not normsq < prev_normsq:
            raise AssertionError("norm failed to decrease")
        prev_normsq = normsq
        if normsq == 0:
            break
        enter, best = None, None
        for i, p in enumerate(points):
            v = vdot(x, p)
            if best is None or v < best:
                enter, best = i, v
        if best >= normsq:
            break
        # points[enter] is outside the affine hull of the support (inner
        # products with x are constant = normsq on that hull), so the
        # grown set stays affinely independent.
        support.append(enter)
        lam[enter] = Fraction(0)
        while True:
            got = affine_minimizer([points[i] for i in support])
            if got is None:
                raise AssertionError("support must stay affinely independent")
            y, w = got
            wmap = dict(zip(support, w))
            if all(v > 0 for v in w):
                lam, x = wmap, y
                break
            theta = min(lam[i] / (lam[i] - wmap[i])
                        for i in support if wmap[i] <= 0)
            new_lam = {}
            for i in support:
                v = (1 - theta) * lam[i] + theta * wmap[i]
                if v > 0:
                    new_lam[i] = v
            support = [i for i in support if i in new_lam]
            lam = new_lam
            x = vzero(len(points[0]))
            for i in support:
                x = vadd(x, vscale(lam[i], points[i]))
    return x, lam


def min_norm_point_naive(points):
    """Oracle: best hull-feasible affine minimizer over all subsets."""
    if not points:
        raise ValueError("need at least one point")
    best = None
    for size in range(1, len(points) + 1):
        for subset in combinations(range(len(points)), size):
            got = affine_minimizer([points[i] for i in subset])
            if got is None:
                continue
            y, w = got
            if any(v < 0 for v in w):
                continue
            normsq = vdot(y, y)
            if best is None or normsq < best[0]:
                best = (normsq, y, {i: v for i, v in zip(subset, w) if v != 0})
    return best[1], best[2]
