"""Exact fixed-point sums: power sums of line weights, the top Chern number,
and characteristic numbers of higher-rank bundles."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .profile import BundleFiberData, FixedPointProfile, SymmetricPolynomial, require_valid


class DegreeMismatch(ValueError):
    pass


def power_sum(p: FixedPointProfile, t: int) -> Fraction:
    """``sum_i a_i**t / prod_j k_j^(i)``, with ``0**0 == 1``."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    require_valid(p)
    return sum((Fraction(pt.line_weight ** t, pt.weight_product) for pt in p.points),
               Fraction(0))


def chern_top(p: FixedPointProfile) -> Fraction:
    """Localized value of ``c_1(L)^n [M]``."""
    return power_sum(p, p.dimension)


@dataclass(frozen=True)
class MomentCheck:
    t: int
    value: Fraction

    @property
    def passed(self) -> bool:
        return self.value == 0


@dataclass(frozen=True)
class ConsistencyReport:
    moments: tuple[MomentCheck, ...]
    chern_top: Fraction

    @property
    def consistent(self) -> bool:
        return all(m.passed for m in self.moments)

    @property
    def integral(self) -> bool:
        return self.chern_top.denominator == 1

    @property
    def warning(self) -> str | None:
        if not self.integral:
            return f"top Chern number {self.chern_top} is not an integer; profile is not realizable"
        return None

    def failed(self) -> list[int]:
        return [m.t for m in self.moments if not m.passed]


def consistency_check(p: FixedPointProfile) -> ConsistencyReport:
    """Check that the power sums vanish for ``t < n``.

    These vanish for any genuine lifted action because the top power sum
    cannot depend on the choice of lift.
    """
    require_valid(p)
    moments = tuple(MomentCheck(t, power_sum(p, t)) for t in range(p.dimension))
    return ConsistencyReport(moments, chern_top(p))


def localize_symmetric(p: FixedPointProfile, b: BundleFiberData, f: SymmetricPolynomial) -> Fraction:
    """``sum_i f(a^(i)) / prod_j k_j^(i)`` for a rank-``m`` bundle with fiber weights ``b``.

    ``f`` must have weighted degree exactly ``n``: below top degree the sum
    need not vanish for a general bundle, so it is rejected rather than
    reported as a characteristic number.
    """
    require_valid(p)
    if len(b.fibers) != p.r:
        raise ValueError(f"bundle has {len(b.fibers)} fibers but profile has {p.r} points")
    if f.rank != b.rank:
        raise ValueError(f"polynomial rank {f.rank} does not match bundle rank {b.rank}")
    deg = f.weighted_degree
    if deg is not None and deg != p.dimension:
        raise DegreeMismatch(f"weighted degree {deg} != dimension {p.dimension}")
    return sum((f.evaluate(fib) / pt.weight_product for pt, fib in zip(p.points, b.fibers)),
               Fraction(0))
