"""Minimum-norm point: exactness, invariants, oracle agreement."""

import random
from fractions import Fraction

import pytest

from tvpm.linalg import vdot
from tvpm.minnorm import affine_minimizer, min_norm_point, min_norm_point_naive

F = Fraction


def test_affine_minimizer_segment():
    got = affine_minimizer([(F(1), F(0)), (F(0), F(1))])
    assert got is not None
    x, lam = got
    assert x == (F(1, 2), F(1, 2))
    assert lam == (F(1, 2), F(1, 2))


def test_affine_minimizer_dependent_returns_none():
    assert affine_minimizer([(F(0),), (F(1),), (F(2),)]) is None
    assert affine_minimizer([(F(1), F(1)), (F(1), F(1))]) is None


def test_affine_minimizer_orthogonality():
    rng = random.Random(5)
    for _ in range(40):
        dim = rng.randint(1, 4)
        k = rng.randint(1, dim + 1)
        pts = [tuple(F(rng.randint(-6, 6), rng.randint(1, 3))
                     for _ in range(dim)) for _ in range(k)]
        got = affine_minimizer(pts)
        if got is None:
            continue
        x, lam = got
        assert sum(lam) == 1
        # x is orthogonal to every direction inside the affine hull
        for p in pts[1:]:
            diff = tuple(a - b for a, b in zip(p, pts[0]))
            assert vdot(x, diff) == 0


def test_examples():
    w, wt = min_norm_point([(F(1), F(0)), (F(0), F(1))])
    assert w == (F(1, 2), F(1, 2))
    assert wt == {0: F(1, 2), 1: F(1, 2)}
    w, wt = min_norm_point([(F(3), F(4))])
    assert w == (F(3), F(4)) and wt == {0: F(1)}
    w, _ = min_norm_point([(F(2), F(2)), (F(0), F(0)), (F(-1), F(5))])
    assert w == (F(0), F(0))
    with pytest.raises(ValueError):
        min_norm_point([])


def test_weights_form_exact_convex_combination():
    rng = random.Random(8)
    for _ in range(60):
        dim = rng.randint(1, 4)
        count = rng.randint(1, 6)
        pts = [tuple(F(rng.randint(-8, 8), rng.randint(1, 4))
                     for _ in range(dim)) for _ in range(count)]
        w, wt = min_norm_point(pts)
        assert sum(wt.values()) == 1
        assert all(v > 0 for v in wt.values())
        comb = tuple(
            sum(wt[i] * pts[i][t] for i in wt) for t in range(dim))
        assert comb == w
        # variational inequality: nothing in the hull is closer
        normsq = vdot(w, w)
        for p in pts:
            assert vdot(w, p) >= normsq


def test_agrees_with_subset_oracle():
    rng = random.Random(12)
    for _ in range(60):
        dim = rng.randint(1, 4)
        count = rng.randint(1, 6)
        pts = [tuple(F(rng.randint(-7, 7), rng.randint(1, 3))
                     for _ in range(dim)) for _ in range(count)]
        fast, _ = min_norm_point(pts)
        slow, _ = min_norm_point_naive(pts)
        assert fast == slow
