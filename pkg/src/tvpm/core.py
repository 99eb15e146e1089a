"""Point configurations, partitions, and the block linear system.

For a partition of n points in R^d into r parts, the common point of all
part affine hulls (when it exists) solves a block system: for each part,
d rows equating the weighted point sum with z and one row forcing the
weights to sum to 1.  Unknowns are the n affine coefficients followed by
the d coordinates of z, so the matrix is r(d+1) x (n+d) and square exactly
when n = (r-1)(d+1)+1.

Classification of the system drives everything downstream: a nonsingular
square system gives a unique intersection point with exact coefficients;
an inconsistent system certifies empty intersection; a consistent
underdetermined system is reported as degenerate (a general-position
failure), never silently repaired.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from tvpm import linalg
from tvpm.linalg import format_rat, format_vec, parse_rat, parse_vec

SCHEMA = "tvpm/1"


@dataclass(frozen=True)
class PointConfig:
    d: int
    r: int
    points: tuple

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be >= 1")
        if self.r < 2:
            raise ValueError("r must be >= 2")
        pts = tuple(tuple(Fraction(x) for x in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ValueError("need at least one point")
        for p in pts:
            if len(p) != self.d:
                raise ValueError("point dimension mismatch")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be distinct")

    @property
    def n(self):
        return len(self.points)

    @property
    def full_size(self):
        return (self.r - 1) * (self.d + 1) + 1

    @property
    def is_full(self):
        return self.n == self.full_size


def canonical_partition(parts):
    """Sort each part and order parts by smallest contained index."""
    return tuple(sorted(tuple(sorted(p)) for p in parts))


def validate_partition(config, parts, require_proper=True):
    """Check disjointness, coverage, nonemptiness, and optionally sizes."""
    seen = []
    for p in parts:
        if len(p) == 0:
            raise ValueError("empty part")
        seen.extend(p)
    if len(parts) != config.r:
        raise ValueError("partition must have exactly r parts")
    if sorted(seen) != list(range(config.n)):
        raise ValueError("parts must partition the index set")
    if require_proper:
        for p in parts:
            if len(p) > config.d + 1:
                raise ValueError("part larger than d+1")


def is_proper(config, parts):
    return all(1 <= len(p) <= config.d + 1 for p in parts)


@dataclass(frozen=True)
class AffineCertificate:
    z: tuple
    alpha: dict
    negatives: frozenset
    gamma: Fraction
    zero_set: frozenset


@dataclass(frozen=True)
class SignPattern:
    negative_count: int
    negative_set: frozenset
    zero_set: frozenset


def make_certificate(z, alpha, gamma=Fraction(1)):
    """Build a certificate, deriving the sign sets from alpha."""
    neg = frozenset(i for i, a in alpha.items() if a < 0)
    zero = frozenset(i for i, a in alpha.items() if a == 0)
    return AffineCertificate(
        z=tuple(z), alpha=dict(alpha), negatives=neg,
        gamma=Fraction(gamma), zero_set=zero,
    )


def sign_pattern(cert):
    return SignPattern(
        negative_count=len(cert.negatives),
        negative_set=cert.negatives,
        zero_set=cert.zero_set,
    )


def build_system(config, partition):
    """Assemble the block matrix and right-hand side for a partition.

    Returns ``(m, b, col_point)`` where column j of m (for j < n) carries
    the coefficient unknown of point ``col_point[j]`` and the last d
    columns carry -z.  Rows come in per-part blocks of d+1: the d
    weighted-sum rows, then the weights-sum row (right-hand side 1).
    """
    validate_partition(config, partition, require_proper=False)
    n, d = config.n, config.d
    zero = Fraction(0)
    col_point = [i for part in partition for i in part]
    col_of = {i: pos for pos, i in enumerate(col_point)}
    m = []
    b = []
    for part in partition:
        for coord in range(d):
            row = [zero] * (n + d)
            for i in part:
                row[col_of[i]] = config.points[i][coord]
            row[n + coord] = Fraction(-1)
            m.append(row)
            b.append(zero)
        ones = [zero] * (n + d)
        for i in part:
            ones[col_of[i]] = Fraction(1)
        m.append(ones)
        b.append(Fraction(1))
    return m, b, col_point


@dataclass(frozen=True)
class Intersection:
    kind: str  # "point" | "empty" | "degenerate"
    cert: object
    det: object  # Fraction for square systems, None otherwise
    rank_m: object
    rank_aug: object


def _solution_cert(x, col_point, n):
    alpha = {col_point[pos]: x[pos] for pos in range(n)}
    return make_certificate(z=x[n:], alpha=alpha)


def intersect_affine_hulls(config, partition):
    """Classify the common point of all part affine hulls.

    Returns Intersection with kind "point" (unique solution, certificate
    attached), "empty" (inconsistent system), or "degenerate" (consistent
    but underdetermined; only possible off general position).
    """
    partition = canonical_partition(partition)
    m, b, col_point = build_system(config, partition)
    n, d = config.n, config.d
    square = len(m) == n + d
    if square:
        got = linalg.solve_linear(m, b)
        if got is not None:
            x, detv = got
            cert = _solution_cert(x, col_point, n)
            return Intersection("point", cert, detv, None, None)
    rk = linalg.rank(m)
    rka = linalg.rank([row + [bi] for row, bi in zip(m, b)])
    detv = Fraction(0) if square else None
    if rk < rka:
        return Intersection("empty", None, detv, rk, rka)
    if rk == n + d:
        kind, x = linalg.solve_general(m, b)
        cert = _solution_cert(x, col_point, n)
        return Intersection("point", cert, detv, rk, rka)
    return Intersection("degenerate", None, detv, rk, rka)


def verify_certificate(config, partition, cert):
    """Re-check a certificate against its configuration, exactly.

    Returns ``(ok, problems)`` where problems names every violated
    equation.  Checks: index coverage, per-part coefficient sums equal 1,
    per-part weighted point sums equal z, and sign-set bookkeeping.
    """
    problems = []
    try:
        validate_partition(config, partition, require_proper=False)
    except ValueError as e:
        return False, ["partition: %s" % e]
    if sorted(cert.alpha) != list(range(config.n)):
        problems.append("alpha does not cover indices 0..n-1")
        return False, problems
    if len(cert.z) != config.d:
        problems.append("z has wrong dimension")
        return False, problems
    for part in partition:
        s = sum(cert.alpha[i] for i in part)
        if s != 1:
            problems.append(
                "part %s: coefficient sum %s != 1" % (list(part), format_rat(s)))
        w = linalg.vzero(config.d)
        for i in part:
            w = linalg.vadd(w, linalg.vscale(cert.alpha[i], config.points[i]))
        if w != tuple(cert.z):
            problems.append(
                "part %s: weighted sum %s != z %s"
                % (list(part), format_vec(w), format_vec(cert.z)))
    neg = frozenset(i for i, a in cert.alpha.items() if a < 0)
    if neg != cert.negatives:
        problems.append("negatives set does not match strict negatives of alpha")
    zero = frozenset(i for i, a in cert.alpha.items() if a == 0)
    if zero != cert.zero_set:
        problems.append("zero_set does not match zeros of alpha")
    if cert.gamma == 0:
        problems.append("gamma is zero")
    return not problems, problems


def config_to_json(config, m_set=None):
    out = {
        "schema": SCHEMA,
        "kind": "point_config",
        "d": config.d,
        "r": config.r,
        "points": [format_vec(p) for p in config.points],
    }
    if m_set is not None:
        out["m"] = sorted(m_set)
    return out


def config_from_json(obj):
    if not isinstance(obj, dict):
        raise ValueError("config JSON must be an object")
    for key in ("d", "r", "points"):
        if key not in obj:
            raise ValueError("config JSON missing %r" % key)
    d, r = obj["d"], obj["r"]
    if not isinstance(d, int) or not isinstance(r, int):
        raise ValueError("d and r must be integers")
    points = tuple(parse_vec(p) for p in obj["points"])
    return PointConfig(d=d, r=r, points=points)


def certificate_to_json(cert, partition, alternative=None, proper=None):
    out = {
        "schema": SCHEMA,
        "kind": "certificate",
        "z": format_vec(cert.z),
        "alpha": {str(i): format_rat(a) for i, a in sorted(cert.alpha.items())},
        "negatives": sorted(cert.negatives),
        "gamma": format_rat(cert.gamma),
        "partition": [list(p) for p in partition],
    }
    if cert.zero_set:
        out["zero_set"] = sorted(cert.zero_set)
    if alternative is not None:
        out["alternative"] = alternative
    if proper is not None:
        out["proper"] = proper
    return out


def certificate_from_json(obj):
    for key in ("z", "alpha", "negatives", "gamma", "partition"):
        if key not in obj:
            raise ValueError("certificate JSON missing %r" % key)
    z = parse_vec(obj["z"])
    alpha = {int(i): parse_rat(a) for i, a in obj["alpha"].items()}
    cert = AffineCertificate(
        z=z,
        alpha=alpha,
        negatives=frozenset(obj["negatives"]),
        gamma=parse_rat(obj["gamma"]),
        zero_set=frozenset(obj.get("zero_set", ())),
    )
    partition = canonical_partition(tuple(tuple(p) for p in obj["partition"]))
    return cert, partition, obj.get("alternative")


def dump_json(obj):
    return json.dumps(obj, indent=2, sort_keys=False)
