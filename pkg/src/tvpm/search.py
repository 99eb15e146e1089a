"""Exhaustive partition search and hull-separation testing.

The enumerator generates every unordered r-partition of the index set
with part sizes capped at d+1, exactly once, in a deterministic order
(indices are placed in restricted-growth fashion, so parts are ordered by
their smallest element).  Brute-force scans over this stream serve as the
independent oracle for the constructive solver: "not found" always means
the whole stream was checked.

Separation of conv(M) from conv(A \\ M) is decided by exact LP
feasibility for a common point; the Farkas vector of an infeasible system
is turned into a strict separating hyperplane witness.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from tvpm import lp
from tvpm.core import intersect_affine_hulls
from tvpm.linalg import vdot, vscale, vzero, vadd


def proper_partitions(n, r, d):
    """Yield all r-partitions of {0..n-1} with part sizes in [1, d+1]."""
    cap = d + 1
    if n < r or n > r * cap:
        return
    parts = []

    def rec(idx):
        if idx == n:
            if len(parts) == r:
                yield tuple(tuple(p) for p in parts)
            return
        used = len(parts)
        remaining = n - idx
        open_slots = sum(cap - len(p) for p in parts) + (r - used) * cap
        if remaining > open_slots or remaining < r - used:
            return
        for p in parts:
            if len(p) < cap:
                p.append(idx)
                yield from rec(idx + 1)
                p.pop()
        if used < r:
            parts.append([idx])
            yield from rec(idx + 1)
            parts.pop()

    yield from rec(0)


@dataclass(frozen=True)
class SearchResult:
    found: bool
    partition: object
    cert: object
    scanned: int
    skipped: int


def _scan(config, accept):
    scanned = 0
    skipped = 0
    for partition in proper_partitions(config.n, config.r, config.d):
        scanned += 1
        res = intersect_affine_hulls(config, partition)
        if res.kind != "point":
            skipped += 1
            continue
        if accept(res.cert):
            return SearchResult(True, partition, res.cert, scanned, skipped)
    return SearchResult(False, None, None, scanned, skipped)


def search_exact_k(config, k):
    """First proper partition whose certificate has exactly k negatives."""
    if not config.is_full:
        raise ValueError("search needs n = (r-1)(d+1)+1 points")
    if not 0 <= k <= config.n:
        raise ValueError("k out of range")
    return _scan(config, lambda cert: len(cert.negatives) == k)


def search_prescribed(config, m_set):
    """First proper partition whose negatives are exactly m_set."""
    if not config.is_full:
        raise ValueError("search needs n = (r-1)(d+1)+1 points")
    target = frozenset(m_set)
    if not target <= frozenset(range(config.n)):
        raise ValueError("m_set out of range")
    return _scan(config, lambda cert: cert.negatives == target)


@dataclass(frozen=True)
class SpectrumResult:
    achievable: frozenset
    scanned: int
    skipped: int


def radon_spectrum(config):
    """Achievable negative counts over all bipartitions, for n = d+2."""
    if config.r != 2:
        raise ValueError("spectrum needs r = 2")
    if config.n != config.d + 2:
        raise ValueError("spectrum needs n = d+2")
    ks = set()
    scanned = 0
    skipped = 0
    for partition in proper_partitions(config.n, 2, config.d):
        scanned += 1
        res = intersect_affine_hulls(config, partition)
        if res.kind != "point":
            skipped += 1
            continue
        ks.add(len(res.cert.negatives))
    return SpectrumResult(frozenset(ks), scanned, skipped)


@dataclass(frozen=True)
class Separated:
    normal: tuple  # primitive integer entries, as Fractions
    offset: Fraction


@dataclass(frozen=True)
class NotSeparated:
    point: tuple
    m_weights: dict
    rest_weights: dict


def check_separation(config, m_set):
    """Decide whether conv(m_set points) and conv(the rest) are disjoint.

    Separated: returns a hyperplane with <normal, x> > offset strictly on
    the m side and < offset strictly on the other side.  NotSeparated:
    returns an exact common point with convex weights for both hulls.
    """
    m_idx = sorted(frozenset(m_set))
    rest = sorted(frozenset(range(config.n)) - frozenset(m_idx))
    if not m_idx or not rest:
        raise ValueError("m_set must be a nonempty proper subset")
    d = config.d
    zero, one = Fraction(0), Fraction(1)
    # Columns: convex weights on the m side, then on the rest; rows ask
    # the two weighted sums to agree and both weight sets to sum to 1.
    rows = []
    for coord in range(d):
        rows.append([config.points[i][coord] for i in m_idx]
                    + [-config.points[j][coord] for j in rest])
    rows.append([one] * len(m_idx) + [zero] * len(rest))
    rows.append([zero] * len(m_idx) + [one] * len(rest))
    rhs = [zero] * d + [one, one]
    status, vec = lp.feasible_point(rows, rhs)
    if status == "feasible":
        lam = {i: vec[pos] for pos, i in enumerate(m_idx)}
        mu = {j: vec[len(m_idx) + pos] for pos, j in enumerate(rest)}
        pt = vzero(d)
        for i, w in lam.items():
            pt = vadd(pt, vscale(w, config.points[i]))
        return NotSeparated(point=pt, m_weights=lam, rest_weights=mu)
    # Farkas vector (u, s, t): <u, a_i> <= -s on m, <u, a_j> >= t on the
    # rest, with -s < t.  Flip so the m side sits above the hyperplane,
    # then scale the normal to primitive integers.
    u = tuple(-vec[coord] for coord in range(d))
    mult = lcm(*(x.denominator for x in u))
    ints = [int(x * mult) for x in u]
    g = gcd(*ints)
    normal = tuple(Fraction(v, g) for v in ints)
    lo = min(vdot(normal, config.points[i]) for i in m_idx)
    hi = max(vdot(normal, config.points[j]) for j in rest)
    if not hi < lo:
        raise AssertionError("Farkas vector does not separate")
    return Separated(normal=normal, offset=(lo + hi) / 2)
