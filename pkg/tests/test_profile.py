import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bottloc import (ALMOST_COMPLEX, ORIENTED, FixedPointProfile, FlavorError, PointDatum,
                     canonicalize, constant_lift, cpn, determinant_lift, product, relift, validate)
from bottloc.profile import negate, oriented_representative

from .strategies import consistent_profiles, profiles

CP1 = FixedPointProfile(1, [((1,), 0), ((-1,), 1)])


def test_validate_examples():
    assert validate(CP1) == []
    bad = validate(FixedPointProfile(1, [((0,), 0)]))
    assert any("zero tangent weight" in v for v in bad)
    bad = validate(FixedPointProfile(2, [((1,), 0)]))
    assert any("wrong tangent-weight count" in v for v in bad)
    assert "no fixed points" in validate(FixedPointProfile(1, []))


def test_validate_reports_every_violation():
    p = FixedPointProfile(2, [((0, 1), 0), ((1,), 0), ((0,), 0)], "weird")
    v = validate(p)
    assert len(v) == 5


def test_relift_examples():
    assert relift(CP1, 5).line_weights == (5, 6)
    assert relift(CP1, 0) == CP1
    assert relift(relift(CP1, 2), -2) == CP1
    assert relift(CP1, 5).tangent_weights == CP1.tangent_weights


def test_determinant_lift_examples():
    assert determinant_lift(cpn((0, 1), 1)).line_weights == (1, -1)
    assert determinant_lift(cpn((0, 1, 2), 1)).line_weights == (3, 0, -3)
    with pytest.raises(FlavorError):
        determinant_lift(FixedPointProfile(1, CP1.points, ORIENTED))


def test_determinant_lift_commutes_with_permutation():
    p = cpn((-2, 0, 3, 5), 1)
    for perm in itertools.permutations(range(p.r)):
        q = FixedPointProfile(p.dimension, [p.points[i] for i in perm], p.flavor)
        assert determinant_lift(q).points == tuple(determinant_lift(p).points[i] for i in perm)


def test_canonicalize_examples():
    p = cpn((0, 1, 3), 2)
    rng = random.Random(0)
    pts = list(p.points)
    rng.shuffle(pts)
    assert canonicalize(FixedPointProfile(2, pts)) == canonicalize(p)
    assert canonicalize(relift(p, 7)) == canonicalize(p)
    assert canonicalize(negate(p)) == canonicalize(p)
    assert min(canonicalize(p).line_weights) == 0


def test_canonicalize_sorts_within_points():
    p = FixedPointProfile(2, [((2, 1), 0), ((1, -1), 3)])
    q = FixedPointProfile(2, [((-1, 1), 3), ((1, 2), 0)])
    assert canonicalize(p) == canonicalize(q)


def test_flavors_differ_on_sign_flips():
    ac = FixedPointProfile(2, [((1, 2), 0), ((-1, 1), 1)], ALMOST_COMPLEX)
    flipped = FixedPointProfile(2, [((-1, -2), 0), ((-1, 1), 1)], ALMOST_COMPLEX)
    assert canonicalize(ac) != canonicalize(flipped)
    o = FixedPointProfile(2, ac.points, ORIENTED)
    of = FixedPointProfile(2, flipped.points, ORIENTED)
    assert canonicalize(o) == canonicalize(of)


def _even_flips(ks):
    n = len(ks)
    for signs in itertools.product((1, -1), repeat=n):
        if signs.count(-1) % 2 == 0:
            yield tuple(sorted(s * k for s, k in zip(signs, ks)))


@given(st.lists(st.integers(-5, 5).filter(bool), min_size=1, max_size=5))
def test_oriented_representative_is_least_even_flip(ks):
    orbit = set(_even_flips(ks))
    rep = oriented_representative(ks)
    assert rep in orbit
    assert rep == min(orbit)


@given(profiles())
def test_canonicalize_idempotent(p):
    c = canonicalize(p)
    assert canonicalize(c) == c
    assert validate(c) == []


@given(profiles(), st.integers(-20, 20))
def test_canonicalize_relift_invariant(p, a):
    assert canonicalize(relift(p, a)) == canonicalize(p)


@given(profiles(max_points=4), st.randoms(use_true_random=False))
def test_canonicalize_orbit(p, rng):
    pts = []
    for pt in p.points:
        k = list(pt.tangent_weights)
        rng.shuffle(k)
        if p.flavor == ORIENTED and len(k) >= 2:
            i, j = rng.sample(range(len(k)), 2)
            k[i], k[j] = -k[i], -k[j]
        pts.append(PointDatum(tuple(k), pt.line_weight))
    rng.shuffle(pts)
    q = FixedPointProfile(p.dimension, pts, p.flavor)
    if rng.random() < 0.5:
        q = negate(q)
    assert canonicalize(q) == canonicalize(p)


@given(consistent_profiles())
def test_generated_profiles_validate(p):
    assert validate(p) == []
    assert validate(constant_lift(p, 3)) == []


def test_generators_validate_products():
    assert validate(product(cpn((0, 2), 1), cpn((1, 4, 5), -1))) == []
