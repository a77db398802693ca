import itertools

import pytest

from bottloc import (ALMOST_COMPLEX, ORIENTED, Classification, SearchSpec, brute_force_enumerate,
                     canonicalize, catalog_audit, chern_top, classify, cpn, determinant_lift,
                     enumerate_consistent, product)
from bottloc.injectivity import CHERN_BOUND, Status
from bottloc.profile import FixedPointProfile
from bottloc.search import tangent_options

from .test_localize import direct_sum

FLAVORS = (ALMOST_COMPLEX, ORIENTED)


def test_single_point_is_empty():
    assert enumerate_consistent(SearchSpec(1, 1, 3, 3)) == []


def test_two_points_on_a_circle_are_mirror_images():
    found = enumerate_consistent(SearchSpec(1, 2, 2, 0))
    assert len(found) == 2
    for p in found:
        (k1,), (k2,) = p.tangent_weights
        assert k2 == -k1
        assert p.line_weights == (0, 0)


def test_below_threshold_everything_is_degenerate():
    found = enumerate_consistent(SearchSpec(2, 2, 2, 2))
    assert found
    for p in found:
        assert chern_top(p) == 0
        assert classify(p) is Classification.NOWHERE


def test_search_finds_projective_plane():
    found = enumerate_consistent(SearchSpec(2, 3, 2, 2))
    assert canonicalize(cpn((0, 1, 2), 1)) in found
    assert canonicalize(cpn((0, 1, 2), 0)) in found
    found = enumerate_consistent(SearchSpec(2, 4, 2, 2))
    assert canonicalize(product(cpn((0, 1), 1), cpn((0, 1), 1))) in found


def test_search_finds_anticanonical_cp1():
    assert canonicalize(determinant_lift(cpn((0, 1), 1))) in enumerate_consistent(SearchSpec(1, 2, 1, 2))


@pytest.mark.parametrize("flavor", FLAVORS)
@pytest.mark.parametrize("n,r", [(1, 2), (1, 3), (2, 3), (2, 4)])
def test_output_is_consistent_canonical_and_sorted(flavor, n, r):
    found = enumerate_consistent(SearchSpec(n, r, 2, 2, flavor))
    keys = [p.sort_key() for p in found]
    assert keys == sorted(set(keys))
    for p in found:
        assert canonicalize(p) == p
        assert p.flavor == flavor
        pts = [(pt.tangent_weights, pt.line_weight) for pt in p.points]
        assert all(direct_sum(pts, t) == 0 for t in range(n))
        assert min(p.line_weights) == 0 and max(p.line_weights) <= 2
        assert all(1 <= abs(k) <= 2 for pt in p.points for k in pt.tangent_weights)


def test_tangent_options_cover_each_class_once():
    for flavor in FLAVORS:
        for n in (1, 2, 3):
            opts = tangent_options(n, 2, flavor)
            raw = itertools.product([-2, -1, 1, 2], repeat=n)
            classes = {canonicalize(FixedPointProfile(n, [(k, 0)], flavor)).sort_key() for k in raw}
            reps = {canonicalize(FixedPointProfile(n, [(k, 0)], flavor)).sort_key() for k in opts}
            assert reps == classes


@pytest.mark.parametrize("flavor", FLAVORS)
@pytest.mark.parametrize("n,r,B,A", [(n, r, B, A) for n in (1, 2) for r in (1, 2, 3)
                                     for B in (1, 2) for A in (0, 1)])
def test_pruned_matches_brute_force(flavor, n, r, B, A):
    spec = SearchSpec(n, r, B, A, flavor)
    assert enumerate_consistent(spec) == brute_force_enumerate(spec)


def test_audit_examples():
    rep = catalog_audit(enumerate_consistent(SearchSpec(2, 3, 3, 3)))
    assert rep.total > 0 and rep.violations == 0 and rep.clean

    rep = catalog_audit([cpn((0, 1, 2), 1)])
    assert rep.dichotomy_cases["a"] == 1 and rep.dichotomy_cases["b"] == 0

    rep = catalog_audit([])
    assert rep.total == 0 and rep.violations == 0 and rep.counterexample is None


def test_audit_flags_bad_entries():
    rep = catalog_audit([FixedPointProfile(1, [((1,), 0)])])
    assert rep.inconsistent == 1 and not rep.clean
    assert rep.verdicts[CHERN_BOUND][Status.VIOLATED] == 0


def test_bad_spec():
    with pytest.raises(ValueError):
        SearchSpec(0, 1, 1, 0)
    with pytest.raises(ValueError):
        SearchSpec(1, 1, 1, 0, "complex")
