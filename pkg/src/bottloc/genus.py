"""Equivariant Dolbeault character and Todd genus of almost-complex fixed-point data."""
from __future__ import annotations

from .exact import NOT_LAURENT, LaurentPolynomial, RationalFunction, as_laurent, ratfun_sum
from .profile import ALMOST_COMPLEX, FixedPointProfile, FlavorError, require_valid


def _factor(k: int) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    # 1 / (1 - t^-k) as numerator, denominator with polynomial entries
    if k > 0:
        return LaurentPolynomial.monomial(k), LaurentPolynomial({k: 1, 0: -1})
    return LaurentPolynomial.constant(1), LaurentPolynomial({0: 1, -k: -1})


def dolbeault_character(p: FixedPointProfile) -> RationalFunction:
    """``sum_i prod_j 1 / (1 - t**(-k_j^(i)))`` as an exact rational function of ``t``."""
    if p.flavor != ALMOST_COMPLEX:
        raise FlavorError("the Dolbeault character needs almost-complex tangent data")
    require_valid(p)
    terms = []
    for pt in p.points:
        num = LaurentPolynomial.constant(1)
        den = LaurentPolynomial.constant(1)
        for k in pt.tangent_weights:
            a, b = _factor(k)
            num, den = num * a, den * b
        terms.append(RationalFunction(num, den))
    return ratfun_sum(terms)


def todd_genus(p: FixedPointProfile):
    """Value of the character at ``t = 1``, or ``NOT_LAURENT``.

    A character with a pole off the origin cannot come from an
    almost-complex circle action.
    """
    lp = as_laurent(dolbeault_character(p))
    if lp is NOT_LAURENT:
        return NOT_LAURENT
    value = lp.evaluate(1)
    if value.denominator != 1:
        raise ValueError(f"character has non-integral value {value} at t = 1")
    return int(value)
