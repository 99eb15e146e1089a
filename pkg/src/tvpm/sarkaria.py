"""Constructive solver: tensor lift, pivoting, and recovery.

The pipeline reduces the sign-prescribed partition problem on n =
(r-1)(d+1)+1 points in R^d to finding a transversal of n point sets in
R^{n-1} whose convex hull contains the origin:

  1. ``companion_simplex``: r vectors in R^{r-1} whose only linear
     dependence (up to scale) is that they sum to zero.
  2. ``lift``: each point a_i becomes the set {v_j (x) b_i} where
     b_i = (a_i, 1), negated exactly on the prescribed index set, so the
     origin is the uniform average of every set.
  3. ``colorful_caratheodory``: pivoting on the exact minimum-norm point
     of the current transversal; while it is nonzero, some color has
     weight zero in its support representation, and swapping that color
     to its most-opposed element strictly shrinks the norm.
  4. ``recover``: reading the partition off the chosen tensor factors and
     unscaling the weights by the common per-part coefficient sum gamma;
     the sign of gamma selects which of the two sign alternatives was
     realized, and an empty part yields an exact witness that the
     prescribed set was not separated.
"""

from dataclasses import dataclass
from fractions import Fraction

from tvpm.core import (
    canonical_partition,
    is_proper,
    make_certificate,
)
from tvpm.linalg import is_zero_vec, tensor, vadd, vdot, vscale, vzero
from tvpm.minnorm import min_norm_point
from tvpm.search import NotSeparated, check_separation


def companion_simplex(r):
    """r vectors in R^{r-1} with v_1 + ... + v_r = 0 as the only
    dependence: the standard basis plus the negated sum."""
    if r < 2:
        raise ValueError("r must be >= 2")
    zero, one = Fraction(0), Fraction(1)
    vecs = []
    for j in range(r - 1):
        vecs.append(tuple(one if t == j else zero for t in range(r - 1)))
    vecs.append((-one,) * (r - 1))
    return tuple(vecs)


@dataclass(frozen=True)
class LiftedSystem:
    sets: tuple  # n color sets, each a tuple of r vectors in R^{n-1}
    m_set: frozenset
    config: object


@dataclass(frozen=True)
class Transversal:
    choice: tuple  # choice[i] = selected element index within set i
    weights: tuple  # convex weights, one per color (zero off support)


def lift(config, m_set):
    """Tensor lift of a full-size configuration with signs on m_set."""
    if not config.is_full:
        raise ValueError("lift needs n = (r-1)(d+1)+1 points")
    m_set = frozenset(m_set)
    if not m_set <= frozenset(range(config.n)):
        raise ValueError("m_set out of range")
    vs = companion_simplex(config.r)
    one = Fraction(1)
    sets = []
    for i, a in enumerate(config.points):
        b = a + (one,)
        if i in m_set:
            b = tuple(-x for x in b)
        lifted = tuple(tensor(v, b) for v in vs)
        sets.append(lifted)
    assert all(len(s[0]) == config.n - 1 for s in sets)
    return LiftedSystem(sets=tuple(sets), m_set=m_set, config=config)


def pivot_to_origin(sets, init_choice, trace=None):
    """Transversal of the color sets whose hull contains the origin.

    Each set must contain the origin in its convex hull.  Returns
    ``(choice, weights)`` with sum weights[i] * sets[i][choice[i]] = 0,
    weights >= 0 summing to 1.  ``trace(step, choice, w, normsq)`` is
    called once per pivot iteration when given.
    """
    ncolors = len(sets)
    choice = list(init_choice)
    current = [sets[i][choice[i]] for i in range(ncolors)]
    prev = None
    step = 0
    while True:
        w, wts = min_norm_point(current)
        normsq = vdot(w, w)
        if trace is not None:
            trace(step, tuple(choice), w, normsq)
        if normsq == 0:
            weights = tuple(wts.get(i, Fraction(0)) for i in range(ncolors))
            return tuple(choice), weights
        if prev is not None and not normsq < prev:
            raise AssertionError("pivot norm failed to decrease")
        prev = normsq
        # The support lies in the hyperplane <w, p> = |w|^2 and is
        # affinely independent, so at most ncolors - 1 colors carry
        # weight; the smallest color without weight gets swapped.
        free = [i for i in range(ncolors) if wts.get(i, Fraction(0)) == 0]
        if not free:
            raise AssertionError("full support with nonzero norm")
        i0 = free[0]
        best_j, best_val = None, None
        for j, s in enumerate(sets[i0]):
            val = vdot(w, s)
            if best_val is None or val < best_val:
                best_j, best_val = j, val
        if best_val > 0:
            raise ValueError(
                "color %d does not contain the origin in its hull" % i0)
        choice[i0] = best_j
        current[i0] = sets[i0][best_j]
        step += 1


def colorful_caratheodory(ls, trace=None):
    """Run the pivoting from the deterministic start j(i) = i mod r."""
    n = len(ls.sets)
    r = len(ls.sets[0])
    init = [i % r for i in range(n)]
    choice, weights = pivot_to_origin(ls.sets, init, trace=trace)
    total = vzero(len(ls.sets[0][0]))
    for i in range(n):
        total = vadd(total, vscale(weights[i], ls.sets[i][choice[i]]))
    assert is_zero_vec(total) and sum(weights) == 1
    return Transversal(choice=tuple(choice), weights=weights)


@dataclass(frozen=True)
class PMCertificate:
    partition: tuple
    cert: object  # AffineCertificate; gamma carries the raw scale factor
    alternative: str  # "in_m" | "complement"
    proper: bool
    separation_warning: object  # None when unchecked, else bool


@dataclass(frozen=True)
class SeparationViolated:
    common_point: tuple
    part: tuple  # the point indices whose split witnesses the overlap
    m_weights: dict
    rest_weights: dict


@dataclass(frozen=True)
class DegenerateGamma:
    choice: tuple
    weights: tuple


def recover(ls, t):
    """Decode a zero transversal into a partition certificate.

    The per-part sums sum_{i in part} eps_i beta_i (a_i, 1) agree across
    parts; their last coordinate is gamma.  gamma > 0 realizes negatives
    on m_set, gamma < 0 on the complement, gamma = 0 is surfaced as
    degenerate.  An empty part forces all sums to vanish and yields an
    exact common point of the two hulls instead.
    """
    config = ls.config
    n, d, r = config.n, config.d, config.r
    beta = t.weights
    parts = [[] for _ in range(r)]
    for i in range(n):
        parts[t.choice[i]].append(i)
    signed = [-beta[i] if i in ls.m_set else beta[i] for i in range(n)]
    sums = []
    for part in parts:
        u = vzero(d + 1)
        for i in part:
            u = vadd(u, vscale(signed[i], config.points[i] + (Fraction(1),)))
        sums.append(u)
    if any(u != sums[0] for u in sums[1:]):
        raise AssertionError("per-part sums must agree")
    if any(not part for part in parts):
        # All sums vanish; inside any part carrying weight, the positive
        # and the negated points average to the same point with the same
        # total weight, exhibiting a common point of the two hulls.
        for part in parts:
            mw = {i: beta[i] for i in part if i in ls.m_set and beta[i] > 0}
            scale = sum(mw.values())
            if scale == 0:
                continue
            rw = {i: beta[i] for i in part if i not in ls.m_set and beta[i] > 0}
            assert sum(rw.values()) == scale
            pt = vzero(d)
            for i, w in mw.items():
                pt = vadd(pt, vscale(w / scale, config.points[i]))
            check = vzero(d)
            for i, w in rw.items():
                check = vadd(check, vscale(w / scale, config.points[i]))
            assert pt == check
            return SeparationViolated(
                common_point=pt,
                part=tuple(part),
                m_weights={i: w / scale for i, w in mw.items()},
                rest_weights={i: w / scale for i, w in rw.items()},
            )
        raise AssertionError("an empty part implies a weighted overlap")
    gamma = sums[0][d]
    if gamma == 0:
        return DegenerateGamma(choice=t.choice, weights=t.weights)
    alpha = {i: signed[i] / gamma for i in range(n)}
    z = vscale(1 / gamma, sums[0][:d])
    cert = make_certificate(z=z, alpha=alpha, gamma=gamma)
    partition = canonical_partition(parts)
    return PMCertificate(
        partition=partition,
        cert=cert,
        alternative="in_m" if gamma > 0 else "complement",
        proper=is_proper(config, partition),
        separation_warning=None,
    )


def tverberg_pm(config, m_set, check_sep=True, trace=None):
    """Full pipeline: lift, pivot, recover.

    When check_sep is set and m_set is a nonempty proper subset, the
    separation hypothesis is tested up front and a failure is attached to
    the certificate as a warning (the pipeline still runs).
    """
    m_set = frozenset(m_set)
    warning = None
    if check_sep and m_set and m_set < frozenset(range(config.n)):
        sep = check_separation(config, m_set)
        warning = isinstance(sep, NotSeparated)
    ls = lift(config, m_set)
    t = colorful_caratheodory(ls, trace=trace)
    result = recover(ls, t)
    if isinstance(result, PMCertificate):
        return PMCertificate(
            partition=result.partition,
            cert=result.cert,
            alternative=result.alternative,
            proper=result.proper,
            separation_warning=warning,
        )
    return result
