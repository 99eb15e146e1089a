"""Acceptance checklist.

Eleven numbered criteria, each its own test, every comparison exact.  A
passing criterion prints one "criterion N: PASS" line; criterion 10 also
prints a non-asserted finding line for its exploratory half.
"""

import random
from fractions import Fraction
from itertools import permutations, product

from tvpm.colored import ColorClasses, colored_tverberg_pm, verify_colorful
from tvpm.core import PointConfig, intersect_affine_hulls, verify_certificate
from tvpm.gen import (
    example1,
    example2,
    general_position,
    random_config,
    separated_subset,
)
from tvpm.linalg import solve_linear
from tvpm.minnorm import min_norm_point, min_norm_point_naive
from tvpm.sarkaria import DegenerateGamma, PMCertificate, tverberg_pm
from tvpm.search import (
    proper_partitions,
    radon_spectrum,
    search_exact_k,
    search_prescribed,
)

F = Fraction

COMBOS = ((1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4),
          (3, 2), (3, 3), (3, 4))

_STREAMS = {}


def prescribed_instances(kind):
    """100 seeded (config, m_set) pairs with m_set separated.

    "small" draws |m| in [1, r-1], "large" draws |m| in [r, n-1].
    Cached so the trace re-run sees the identical stream.
    """
    if kind in _STREAMS:
        return _STREAMS[kind]
    base = 2000 if kind == "small" else 3000
    rng = random.Random(base + 100)
    out = []
    for i in range(100):
        d, r = COMBOS[i % len(COMBOS)]
        cfg = random_config(d, r, base + i)
        if kind == "small":
            size = rng.randint(1, r - 1)
        else:
            size = rng.randint(r, cfg.n - 1)
        out.append((cfg, separated_subset(cfg, size, base + i)))
    _STREAMS[kind] = out
    return out


def random_proper_partition(n, r, d, rng):
    sizes = [c for c in product(range(1, d + 2), repeat=r) if sum(c) == n]
    comp = rng.choice(sizes)
    idx = list(range(n))
    rng.shuffle(idx)
    parts = []
    at = 0
    for s in comp:
        parts.append(tuple(sorted(idx[at:at + s])))
        at += s
    return tuple(parts)


def random_classes(d, r, seed):
    rng = random.Random(seed)
    n = (r - 1) * d + 1
    while True:
        pts = []
        for _ in range(n * r):
            pts.append(tuple(F(rng.randint(-10**6, 10**6), 10**3)
                             for _ in range(d)))
        if len(set(pts)) == len(pts) and general_position(pts, d):
            groups = tuple(tuple(pts[i * r:(i + 1) * r]) for i in range(n))
            return ColorClasses(d=d, r=r, classes=groups)


def enumerate_colorful_solutions(cc):
    """All exactly-solvable colorful assignments, relabeling-invariant."""
    keys = set()
    n, r, d = cc.n, cc.r, cc.d
    for asg in product(tuple(permutations(range(r))), repeat=n):
        rows = []
        rhs = []
        for l in range(r):
            for c in range(d):
                row = [cc.classes[i][asg[i][l]][c] for i in range(n)]
                row += [F(-1) if c == t else F(0) for t in range(d)]
                rows.append(row)
                rhs.append(F(0))
        rows.append([F(1)] * n + [F(0)] * d)
        rhs.append(F(1))
        sol = solve_linear(rows, rhs)
        if sol is None:
            continue
        x, _ = sol
        parts = frozenset(
            frozenset((i, asg[i][l]) for i in range(n)) for l in range(r))
        keys.add((tuple(x[:n]), tuple(x[n:]), parts))
    return keys


def colorful_solution_key(cc, cp):
    parts = frozenset(
        frozenset((i, cp.assignment[i][l]) for i in range(cc.n))
        for l in range(cc.r))
    return (tuple(cp.alpha), tuple(cp.z), parts)


def test_criterion_01_every_k_below_r_is_reachable():
    checked = 0
    for (d, r) in ((1, 2), (1, 3), (2, 2), (2, 3), (3, 2)):
        for s in range(100):
            cfg = random_config(d, r, 1000 + s)
            for k in range(r):
                res = search_exact_k(cfg, k)
                assert res.found, (d, r, s, k)
                assert len(res.cert.negatives) == k
                ok, problems = verify_certificate(cfg, res.partition, res.cert)
                assert ok, problems
                checked += 1
    print("criterion 1: PASS - %d (config, k) searches found a partition "
          "and every certificate re-verified exactly" % checked)


def test_criterion_02_small_prescriptions_hit_exactly():
    for cfg, m in prescribed_instances("small"):
        res = tverberg_pm(cfg, m)
        assert isinstance(res, PMCertificate), (cfg.d, cfg.r, sorted(m))
        assert res.alternative == "in_m"
        assert res.cert.negatives == m
        assert res.separation_warning is False
        ok, problems = verify_certificate(cfg, res.partition, res.cert)
        assert ok, problems
        direct = intersect_affine_hulls(cfg, res.partition)
        assert direct.kind == "point"
        assert direct.cert.z == res.cert.z
        assert direct.cert.alpha == res.cert.alpha
    print("criterion 2: PASS - 100 runs with |m| < r: negatives = m and the "
          "direct block solve reproduces identical z and alpha")


def test_criterion_03_large_prescriptions_dichotomy():
    hits = {"in_m": 0, "complement": 0}
    for cfg, m in prescribed_instances("large"):
        res = tverberg_pm(cfg, m)
        assert isinstance(res, PMCertificate), (cfg.d, cfg.r, sorted(m))
        comp = frozenset(range(cfg.n)) - m
        assert res.cert.negatives in (m, comp)
        assert res.cert.negatives == (m if res.alternative == "in_m" else comp)
        assert res.separation_warning is False
        ok, problems = verify_certificate(cfg, res.partition, res.cert)
        assert ok, problems
        hits[res.alternative] += 1
    cfg, m = example2(2, 3)
    res = tverberg_pm(cfg, m)
    comp = frozenset(range(cfg.n)) - m
    assert res.alternative == "complement"
    assert res.cert.negatives == comp
    assert not search_prescribed(cfg, m).found
    assert search_prescribed(cfg, comp).found
    print("criterion 3: PASS - 100 runs with |m| >= r split %d in_m / "
          "%d complement; the separated-cluster instance admits only the "
          "complement, confirmed exhaustively" % (hits["in_m"],
                                                  hits["complement"]))


def test_criterion_04_surrounded_point_is_impossible():
    for seed in (0, 1, 2):
        cfg, m = example1(2, 3, F(1, 100), seed)
        res = search_prescribed(cfg, m)
        assert not res.found
        assert res.scanned == 175
        assert res.skipped == 0
    print("criterion 4: PASS - 3 seeds, all 175 proper partitions scanned, "
          "none with negatives = {centroid}")


def test_criterion_05_exact_classification():
    rng = random.Random(5100)
    for i in range(100):
        d, r = COMBOS[i % len(COMBOS)]
        cfg = random_config(d, r, 5000 + i)
        parts = random_proper_partition(cfg.n, r, d, rng)
        res = intersect_affine_hulls(cfg, parts)
        assert res.kind == "point", (d, r, i, res.kind)
        assert res.det != 0
    for i in range(100):
        d, r = COMBOS[i % len(COMBOS)]
        full = random_config(d, r, 5500 + i)
        n_def = rng.randint(r, full.n - 1)
        cfg = PointConfig(d=d, r=r, points=full.points[:n_def])
        parts = random_proper_partition(n_def, r, d, rng)
        res = intersect_affine_hulls(cfg, parts)
        assert res.kind == "empty", (d, r, i, res.kind)
    square = PointConfig(d=2, r=2, points=(
        (F(0), F(0)), (F(1), F(0)), (F(0), F(1)), (F(1), F(1))))
    sq_res = intersect_affine_hulls(square, ((0, 1), (2, 3)))
    assert sq_res.kind in ("empty", "degenerate")
    print("criterion 5: PASS - 100 full instances are a point with "
          "det != 0, 100 deficient instances are empty, the parallel-edge "
          "square partition is flagged %s" % sq_res.kind)


def test_criterion_06_radon_spectrum_equals_bound():
    tallies = []
    mismatches = []
    for d in range(1, 6):
        expected = frozenset(range((d + 2) // 2 + 1))
        eq = 0
        for s in range(50):
            cfg = random_config(d, 2, 6000 + s)
            ach = radon_spectrum(cfg).achievable
            assert expected <= ach, (d, s)
            if ach == expected:
                eq += 1
            else:
                mismatches.append((d, 6000 + s, tuple(sorted(ach))))
        tallies.append("d=%d: %d/50" % (d, eq))
    assert not mismatches, (
        "every k <= floor((d+2)/2) was achievable in all 250 runs, but "
        "equality with {0..floor((d+2)/2)} held only in [%s]; first strict "
        "superset: d=%d seed=%d spectrum=%s, where each extra k is backed "
        "by an exactly verified certificate, so the bound is a guaranteed "
        "floor of the spectrum, not its maximum"
        % (", ".join(tallies), mismatches[0][0], mismatches[0][1],
           list(mismatches[0][2])))
    print("criterion 6: PASS - spectrum equals {0..floor((d+2)/2)} for "
          "d = 1..5, 50 seeds each")


def test_criterion_07_line_bound_is_tight():
    for r in (2, 3, 4):
        n = 2 * r - 1
        total = sum(1 for _ in proper_partitions(n, r, 1))
        for s in range(50):
            cfg = random_config(1, r, 7000 + s)
            hit = search_exact_k(cfg, r - 1)
            assert hit.found
            ok, problems = verify_certificate(cfg, hit.partition, hit.cert)
            assert ok, problems
            miss = search_exact_k(cfg, r)
            assert not miss.found
            assert miss.scanned == total
    print("criterion 7: PASS - on the line, k = r-1 is always reachable "
          "and k = r never is, exhaustively, for r = 2, 3, 4")


def test_criterion_08_half_negative_certificates():
    for (d, r, k) in ((2, 2, 2), (2, 4, 5), (4, 2, 3)):
        for s in range(50):
            cfg = random_config(d, r, 8000 + s)
            assert cfg.n == 2 * k
            m = separated_subset(cfg, k, 8000 + s)
            res = tverberg_pm(cfg, m, check_sep=False)
            assert isinstance(res, PMCertificate), (d, r, k, s)
            assert len(res.cert.negatives) == k
            assert res.cert.negatives in (m, frozenset(range(cfg.n)) - m)
            ok, problems = verify_certificate(cfg, res.partition, res.cert)
            assert ok, problems
    print("criterion 8: PASS - 150 runs with separated |m| = n/2 produce "
          "exactly n/2 negative coefficients")


def test_criterion_09_colored_certificates():
    rng = random.Random(9100)
    confirmed = 0
    for combo_i, (d, r) in enumerate(((1, 2), (2, 2), (1, 3))):
        for s in range(50):
            cc = random_classes(d, r, 9000 + combo_i * 50 + s)
            size = rng.randint(0, cc.n)
            m = frozenset(rng.sample(range(cc.n), size))
            res = colored_tverberg_pm(cc, m)
            assert not isinstance(res, DegenerateGamma), (d, r, s)
            ok, problems = verify_colorful(cc, res)
            assert ok, problems
            comp = frozenset(range(cc.n)) - m
            assert res.negatives in (m, comp)
            if (d, r) != (1, 3):
                key = colorful_solution_key(cc, res)
                assert key in enumerate_colorful_solutions(cc)
                confirmed += 1
    print("criterion 9: PASS - 150 colored runs re-verified with the sign "
          "split on m or its complement; %d confirmed against full "
          "enumeration" % confirmed)


def test_criterion_10_exploratory_large_k():
    found3 = 0
    found4 = 0
    for s in range(500):
        cfg = random_config(2, 3, 10000 + s)
        if search_exact_k(cfg, 3).found:
            found3 += 1
        if search_exact_k(cfg, 4).found:
            found4 += 1
    print("criterion 10: finding - d=2, r=3, k=4 found in %d/500 runs "
          "(reported, not asserted)" % found4)
    assert found3 == 500
    print("criterion 10: PASS - d=2, r=3, k=3 found in 500/500 runs")


def test_criterion_11_solver_internal_properties():
    runs = 0
    for kind in ("small", "large"):
        for cfg, m in prescribed_instances(kind):
            norms = []
            res = tverberg_pm(
                cfg, m, check_sep=False,
                trace=lambda step, choice, w, nsq: norms.append(nsq))
            assert isinstance(res, PMCertificate)
            assert norms[-1] == 0
            assert all(a > b for a, b in zip(norms, norms[1:]))
            runs += 1
    rng = random.Random(11100)
    for _ in range(200):
        dim = rng.randint(1, 4)
        count = rng.randint(1, 6)
        pts = [tuple(F(rng.randint(-12, 12), rng.randint(1, 4))
                     for _ in range(dim)) for _ in range(count)]
        w_fast, _ = min_norm_point(pts)
        w_slow, _ = min_norm_point_naive(pts)
        assert w_fast == w_slow
    print("criterion 11: PASS - pivot norm strictly decreased in all %d "
          "runs; min-norm point agreed with the subset oracle on 200 "
          "random sets" % runs)
