"""Fixed-point weight data for circle actions with isolated fixed points.

A :class:`FixedPointProfile` stores, for each fixed point, the tangent
weights of the isotropy representation and the weight of a chosen lift of
the action on a complex line bundle. Profiles are plain immutable values;
construction never rejects malformed data, :func:`validate` reports it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Mapping, Sequence

ALMOST_COMPLEX = "almost-complex"
ORIENTED = "oriented"
FLAVORS = (ALMOST_COMPLEX, ORIENTED)


class InvalidProfile(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid profile: " + "; ".join(self.violations))


class FlavorError(ValueError):
    pass


@dataclass(frozen=True)
class PointDatum:
    tangent_weights: tuple[int, ...]
    line_weight: int = 0

    def __post_init__(self):
        object.__setattr__(self, "tangent_weights", tuple(self.tangent_weights))

    @property
    def weight_product(self) -> int:
        return prod(self.tangent_weights)

    @property
    def euler_inverse(self) -> Fraction:
        """``1 / prod(k_j)``, the localized contribution of the point to a degree-zero sum."""
        return Fraction(1, self.weight_product)


def _as_point(pt) -> PointDatum:
    if isinstance(pt, PointDatum):
        return pt
    if isinstance(pt, Mapping):
        return PointDatum(pt["tangent_weights"], pt.get("line_weight", 0))
    k, a = pt
    return PointDatum(k, a)


@dataclass(frozen=True)
class FixedPointProfile:
    """Localized data ``{k_j^(i)}, {a_i}`` on a manifold of real dimension ``2 * dimension``.

    ``points`` accepts :class:`PointDatum` instances or ``(tangent_weights,
    line_weight)`` pairs. With the oriented flavor each point's tangent
    weights are only meaningful up to an even number of sign changes.
    """

    dimension: int
    points: tuple[PointDatum, ...]
    flavor: str = ALMOST_COMPLEX

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(_as_point(p) for p in self.points))

    @property
    def r(self) -> int:
        return len(self.points)

    @property
    def line_weights(self) -> tuple[int, ...]:
        return tuple(p.line_weight for p in self.points)

    @property
    def tangent_weights(self) -> tuple[tuple[int, ...], ...]:
        return tuple(p.tangent_weights for p in self.points)

    def with_line_weights(self, weights: Sequence[int]) -> FixedPointProfile:
        weights = list(weights)
        if len(weights) != self.r:
            raise ValueError(f"expected {self.r} line weights, got {len(weights)}")
        return FixedPointProfile(
            self.dimension,
            [PointDatum(p.tangent_weights, a) for p, a in zip(self.points, weights)],
            self.flavor,
        )

    def sort_key(self) -> tuple:
        """Total order used for canonical forms and catalog output."""
        return (self.dimension, self.r,
                tuple(tuple(p.tangent_weights) + (p.line_weight,) for p in self.points))


def validate(p: FixedPointProfile) -> list[str]:
    """Return every structural violation in ``p``; an empty list means the profile is valid."""
    out = []
    if p.flavor not in FLAVORS:
        out.append(f"unknown flavor {p.flavor!r}")
    if not isinstance(p.dimension, int) or isinstance(p.dimension, bool) or p.dimension < 1:
        out.append(f"dimension must be a positive integer, got {p.dimension!r}")
    if p.r == 0:
        out.append("no fixed points")
    for i, pt in enumerate(p.points):
        if not all(isinstance(k, int) and not isinstance(k, bool) for k in pt.tangent_weights):
            out.append(f"point {i}: non-integer tangent weight")
            continue
        if not isinstance(pt.line_weight, int) or isinstance(pt.line_weight, bool):
            out.append(f"point {i}: non-integer line weight")
        if len(pt.tangent_weights) != p.dimension:
            out.append(f"point {i}: wrong tangent-weight count "
                       f"(expected {p.dimension}, got {len(pt.tangent_weights)})")
        if any(k == 0 for k in pt.tangent_weights):
            out.append(f"point {i}: zero tangent weight")
    return out


def require_valid(p: FixedPointProfile) -> FixedPointProfile:
    violations = validate(p)
    if violations:
        raise InvalidProfile(violations)
    return p


def relift(p: FixedPointProfile, a: int) -> FixedPointProfile:
    """Change the lift of the action: every line weight moves by the same integer ``a``."""
    return p.with_line_weights([w + a for w in p.line_weights])


def determinant_lift(p: FixedPointProfile) -> FixedPointProfile:
    """Line weights of the top exterior power of the tangent bundle, i.e. ``c = c_1(M, J)``.

    The weight on the determinant fiber at a point is the sum of its tangent
    weights, which only makes sense when their signs are fixed.
    """
    if p.flavor != ALMOST_COMPLEX:
        raise FlavorError("determinant lift needs almost-complex tangent data")
    return p.with_line_weights([sum(pt.tangent_weights) for pt in p.points])


def negate(p: FixedPointProfile) -> FixedPointProfile:
    """Reverse the direction of the circle: all tangent and line weights change sign."""
    return FixedPointProfile(
        p.dimension,
        [PointDatum(tuple(-k for k in pt.tangent_weights), -pt.line_weight) for pt in p.points],
        p.flavor,
    )


def oriented_representative(weights: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least sorted tuple reachable by an even number of sign flips.

    The class is fixed by the multiset of absolute values and the sign of the
    product. All entries negative is least when the parity allows; otherwise
    the single positive entry goes on the smallest absolute value.
    """
    mags = sorted((abs(k) for k in weights), reverse=True)
    negatives = sum(1 for k in weights if k < 0)
    if (len(mags) - negatives) % 2 == 0:
        return tuple(-m for m in mags)
    return tuple(-m for m in mags[:-1]) + (mags[-1],)


def _point_representative(pt: PointDatum, flavor: str, shift: int) -> PointDatum:
    if flavor == ORIENTED:
        k = oriented_representative(pt.tangent_weights)
    else:
        k = tuple(sorted(pt.tangent_weights))
    return PointDatum(k, pt.line_weight - shift)


def canonicalize(p: FixedPointProfile) -> FixedPointProfile:
    """Least representative under point permutation, within-point reordering
    (plus even sign flips for the oriented flavor), line-weight shift with
    minimum 0, and global negation."""
    best = None
    for q in (p, negate(p)):
        shift = min(q.line_weights) if q.points else 0
        pts = sorted((_point_representative(pt, q.flavor, shift) for pt in q.points),
                     key=lambda d: (d.tangent_weights, d.line_weight))
        cand = FixedPointProfile(q.dimension, pts, q.flavor)
        if best is None or cand.sort_key() < best.sort_key():
            best = cand
    return best


# -- rank-m bundle data ------------------------------------------------------

@dataclass(frozen=True)
class BundleFiberData:
    """Fiber weights ``a_1^(i) .. a_m^(i)`` of a lifted rank-``m`` bundle at each fixed point."""

    rank: int
    fibers: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        fibers = tuple(tuple(f) for f in self.fibers)
        object.__setattr__(self, "fibers", fibers)
        if self.rank < 1:
            raise ValueError("bundle rank must be positive")
        for i, f in enumerate(fibers):
            if len(f) != self.rank:
                raise ValueError(f"fiber {i} has {len(f)} weights, expected {self.rank}")

    @classmethod
    def from_line_weights(cls, p: FixedPointProfile) -> BundleFiberData:
        return cls(1, [(a,) for a in p.line_weights])


def elementary_symmetric(values: Sequence) -> list:
    """``[e_0, e_1, ..., e_m]`` of ``values``."""
    e = [1] + [0] * len(values)
    for x in values:
        for d in range(len(e) - 1, 0, -1):
            e[d] = e[d] + e[d - 1] * x
    return e


@dataclass(frozen=True)
class SymmetricPolynomial:
    """A polynomial in the elementary symmetric generators ``e_1 .. e_rank``.

    ``terms`` maps exponent vectors ``(d_1, .., d_rank)`` to coefficients and
    must be weighted-homogeneous (``sum(i * d_i)`` constant).
    """

    rank: int
    terms: Mapping[tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for exps, c in dict(self.terms).items():
            exps = tuple(int(d) for d in exps)
            if len(exps) != self.rank or any(d < 0 for d in exps):
                raise ValueError(f"bad exponent vector {exps} for rank {self.rank}")
            c = Fraction(c)
            if c != 0:
                clean[exps] = clean.get(exps, Fraction(0)) + c
        clean = {e: c for e, c in sorted(clean.items()) if c != 0}
        degrees = {self._weight(e) for e in clean}
        if len(degrees) > 1:
            raise ValueError(f"not weighted-homogeneous: degrees {sorted(degrees)}")
        object.__setattr__(self, "terms", clean)

    @staticmethod
    def _weight(exps) -> int:
        return sum((i + 1) * d for i, d in enumerate(exps))

    @classmethod
    def generator_power(cls, rank: int, index: int, power: int = 1) -> SymmetricPolynomial:
        """``e_index ** power`` in rank ``rank``."""
        exps = [0] * rank
        exps[index - 1] = power
        return cls(rank, {tuple(exps): 1})

    @property
    def weighted_degree(self) -> int | None:
        """Common weighted degree, or None for the zero polynomial."""
        for e in self.terms:
            return self._weight(e)
        return None

    def evaluate(self, values: Sequence[int]) -> Fraction:
        """Evaluate ``f(x_1..x_m)``, i.e. substitute ``e_d(values)`` for the generators."""
        if len(values) != self.rank:
            raise ValueError(f"expected {self.rank} values, got {len(values)}")
        e = elementary_symmetric(values)
        total = Fraction(0)
        for exps, c in self.terms.items():
            total += c * prod(e[i + 1] ** d for i, d in enumerate(exps))
        return total

