"""Exact rationals, Laurent polynomials and rational functions in one variable ``t``.

Rationals are :class:`fractions.Fraction`. Polynomial arithmetic is done on
dense coefficient lists (lowest degree first) over ``Fraction``; the public
types wrap these in immutable, canonically normalized values so that
equality is structural.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence

Rational = Fraction

_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def rational_arith(a, b, op: str) -> Fraction:
    """Apply ``op`` (one of add, sub, mul, div) to two rationals exactly.

    Raises ZeroDivisionError for division by zero.
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(Fraction(a), Fraction(b))


class Sentinel:
    __slots__ = ("_name",)

    def __init__(self, name):
        self._name = name

    def __repr__(self):
        return self._name

    def __bool__(self):
        return False


NOT_LAURENT = Sentinel("NOT_LAURENT")
"""Returned by :func:`as_laurent` when the function has a genuine pole away from 0."""


# -- dense polynomial helpers ------------------------------------------------

def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pdivmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    if len(rem) <= db:
        return [], _trim(rem)
    quo = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        c = c / lead
        quo[k - db] = c
        for j in range(db + 1):
            rem[k - db + j] -= c * b[j]
    return _trim(quo), _trim(rem[:db])


def _pgcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list:
    """Monic gcd over Q[t]."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


# -- Laurent polynomials -----------------------------------------------------

class LaurentPolynomial:
    """A finite sum ``sum c_e t**e`` with integer exponents and nonzero rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, coefficients: Mapping[int, object] | Iterable = ()):
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        acc: dict[int, Fraction] = {}
        for e, c in items:
            if isinstance(e, bool) or int(e) != e:
                raise TypeError(f"exponent must be an integer, got {e!r}")
            e = int(e)
            acc[e] = acc.get(e, Fraction(0)) + Fraction(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        self._hash = None

    @classmethod
    def constant(cls, c) -> LaurentPolynomial:
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coefficient=1) -> LaurentPolynomial:
        return cls({exponent: coefficient})

    @classmethod
    def _from_dense(cls, coeffs: Sequence[Fraction], shift: int = 0) -> LaurentPolynomial:
        return cls((i + shift, c) for i, c in enumerate(coeffs))

    def _to_dense(self):
        """Return ``(shift, coeffs)`` with ``self == t**shift * coeffs(t)`` and ``coeffs[0] != 0``."""
        if not self._terms:
            return 0, []
        lo = self._terms[0][0]
        out = [Fraction(0)] * (self._terms[-1][0] - lo + 1)
        for e, c in self._terms:
            out[e - lo] = c
        return lo, out

    @property
    def terms(self) -> tuple:
        """Sorted ``(exponent, coefficient)`` pairs."""
        return self._terms

    def coefficient(self, exponent: int) -> Fraction:
        for e, c in self._terms:
            if e == exponent:
                return c
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._terms

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return self._terms[0][0]

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[-1][0]

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        return sum((c * x**e for e, c in self._terms), Fraction(0))

    def __add__(self, other):
        other = _as_laurent_operand(other)
        if other is NotImplemented:
            return other
        return LaurentPolynomial(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        other = _as_laurent_operand(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_laurent_operand(other)
        if other is NotImplemented:
            return other
        acc: dict[int, Fraction] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, Fraction(0)) + c1 * c2
        return LaurentPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        out = LaurentPolynomial.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = _as_laurent_operand(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("LaurentPolynomial", self._terms))
        return self._hash

    def __repr__(self):
        return f"LaurentPolynomial({dict(self._terms)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            if e == 0:
                mono = str(abs(c))
            else:
                mono = "t" if e == 1 else f"t^{e}"
                if abs(c) != 1:
                    mono = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out


def _as_laurent_operand(x):
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return LaurentPolynomial.constant(x)
    return NotImplemented


# -- rational functions ------------------------------------------------------

class RationalFunction:
    """A quotient of Laurent polynomials in canonical reduced form.

    The stored denominator is an ordinary polynomial with constant term 1;
    every power of ``t`` lives in the numerator, and numerator and
    denominator share no nonconstant factor. Zero is ``0 / 1``.
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, numerator, denominator=1):
        num = _as_laurent_operand(numerator)
        den = _as_laurent_operand(denominator)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("numerator and denominator must be Laurent polynomials or rationals")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self._hash = None
        if num.is_zero():
            self._num = num
            self._den = LaurentPolynomial.constant(1)
            return
        p, n_dense = num._to_dense()
        q, d_dense = den._to_dense()
        g = _pgcd(n_dense, d_dense)
        if len(g) > 1:
            n_dense = _pdivmod(n_dense, g)[0]
            d_dense = _pdivmod(d_dense, g)[0]
        # d_dense[0] != 0 since den was shifted to nonzero constant term
        scale = d_dense[0]
        self._num = LaurentPolynomial._from_dense([c / scale for c in n_dense], p - q)
        self._den = LaurentPolynomial._from_dense([c / scale for c in d_dense])

    @property
    def numerator(self) -> LaurentPolynomial:
        return self._num

    @property
    def denominator(self) -> LaurentPolynomial:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def evaluate(self, x) -> Fraction:
        d = self._den.evaluate(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at t = {x}")
        if Fraction(x) == 0 and self._num._terms and self._num._terms[0][0] < 0:
            raise ZeroDivisionError("pole at t = 0")
        return self._num.evaluate(x) / d

    def __add__(self, other):
        other = _as_ratfun_operand(other)
        if other is NotImplemented:
            return other
        if self._den == other._den:
            return RationalFunction(self._num + other._num, self._den)
        return RationalFunction(self._num * other._den + other._num * self._den,
                                self._den * other._den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self._num, self._den)

    def __sub__(self, other):
        other = _as_ratfun_operand(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_ratfun_operand(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfun_operand(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other):
        return _as_ratfun_operand(other) / self

    def __eq__(self, other):
        other = _as_ratfun_operand(other)
        if other is NotImplemented:
            return other
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("RationalFunction", self._num, self._den))
        return self._hash

    def __repr__(self):
        return f"RationalFunction({self._num!r}, {self._den!r})"

    def __str__(self):
        if self._den == 1:
            return str(self._num)
        return f"({self._num}) / ({self._den})"


def _as_ratfun_operand(x):
    if isinstance(x, RationalFunction):
        return x
    lp = _as_laurent_operand(x)
    if lp is NotImplemented:
        return lp
    return RationalFunction(lp)


def ratfun_sum(terms: Iterable[RationalFunction]) -> RationalFunction:
    terms = list(terms)
    if not terms:
        raise ValueError("ratfun_sum needs at least one term")
    return reduce(lambda x, y: x + y, terms[1:], _as_ratfun_operand(terms[0]))


def as_laurent(f: RationalFunction):
    """Return ``f`` as a :class:`LaurentPolynomial`, or ``NOT_LAURENT``.

    In canonical form a monomial denominator can only be the constant 1.
    """
    f = _as_ratfun_operand(f)
    if f.denominator == 1:
        return f.numerator
    return NOT_LAURENT
