import itertools

import pytest

from bottloc import (NOT_LAURENT, ORIENTED, FixedPointProfile, FlavorError, LaurentPolynomial,
                     RationalFunction, cpn, dolbeault_character, product, todd_genus)

ONE = RationalFunction(1)
LAMBDAS = {
    1: [(0, 1), (-2, 5), (3, 4)],
    2: [(0, 1, 2), (-3, 1, 4), (0, 2, 7)],
    3: [(0, 1, 2, 3), (-1, 2, 3, 7), (0, 5, 6, 11)],
    4: [(0, 1, 2, 3, 4), (-2, 0, 1, 5, 9), (0, 3, 4, 8, 10)],
}


def test_character_examples():
    assert dolbeault_character(cpn((0, 1), 1)) == ONE
    assert dolbeault_character(cpn((0, 1, 2), 1)) == ONE
    single = dolbeault_character(FixedPointProfile(1, [((1,), 0)]))
    t = LaurentPolynomial.monomial(1)
    # 1 / (1 - t^-1) = t / (t - 1)
    assert single == RationalFunction(t, t - 1)


def test_todd_examples():
    assert todd_genus(cpn((0, 1), 1)) == 1
    assert todd_genus(cpn((0, 1, 2), 1)) == 1
    assert todd_genus(FixedPointProfile(1, [((1,), 0)])) is NOT_LAURENT


@pytest.mark.parametrize("lam", [lam for n in LAMBDAS for lam in LAMBDAS[n]])
def test_projective_character_is_one(lam):
    assert dolbeault_character(cpn(lam, 0)) == ONE
    assert todd_genus(cpn(lam, 0)) == 1


def test_product_multiplicativity():
    p, q = cpn((0, 1), 1), cpn((-1, 2, 4), 1)
    assert dolbeault_character(product(p, q)) == dolbeault_character(p) * dolbeault_character(q)
    # non-constant characters multiply too
    a = FixedPointProfile(1, [((1,), 0)])
    b = FixedPointProfile(1, [((-2,), 0), ((3,), 0)])
    assert dolbeault_character(product(a, b)) == dolbeault_character(a) * dolbeault_character(b)


def test_character_symmetries():
    p = cpn((-1, 2, 3, 7), 1)
    ref = dolbeault_character(FixedPointProfile(1, [((2,), 0), ((-3,), 0), ((5,), 0)]))
    q = FixedPointProfile(1, [((5,), 0), ((2,), 0), ((-3,), 0)])
    assert dolbeault_character(q) == ref
    for perm in itertools.permutations(range(3)):
        pts = [(tuple(pt.tangent_weights[i] for i in perm), 0) for pt in p.points]
        assert dolbeault_character(FixedPointProfile(3, pts)) == ONE


def test_character_sees_sign_flips():
    flipped = FixedPointProfile(1, [((1,), 0), ((1,), 0)])
    assert dolbeault_character(flipped) != dolbeault_character(cpn((0, 1), 1))
    assert todd_genus(flipped) is NOT_LAURENT


def test_oriented_rejected():
    with pytest.raises(FlavorError):
        dolbeault_character(FixedPointProfile(1, [((1,), 0), ((-1,), 0)], ORIENTED))
