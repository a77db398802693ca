"""Level decomposition of line weights, injectivity classes and the
fixed-point lower-bound verdicts."""
from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import Sentinel
from .localize import ConsistencyReport, consistency_check
from .profile import FixedPointProfile, require_valid

UNDERDETERMINED = Sentinel("UNDERDETERMINED")


class Classification(str, enum.Enum):
    EVERYWHERE = "everywhere-injective"
    SOMEWHERE_ONLY = "somewhere-injective-only"
    NOWHERE = "not-somewhere-injective"

    @property
    def somewhere_injective(self) -> bool:
        return self is not Classification.NOWHERE


class Status(str, enum.Enum):
    VERIFIED = "verified"
    VIOLATED = "violated"
    NOT_APPLICABLE = "not-applicable"


# statement ids, in report order
CHERN_BOUND = "chern-bound"          # c^n[M] != 0  =>  r >= n+1
INJECTIVE_BOUND = "injective-bound"  # somewhere injective  =>  r >= n+1
DICHOTOMY = "dichotomy"              # r == n+1  =>  exactly one of (a), (b)
STATEMENTS = (CHERN_BOUND, INJECTIVE_BOUND, DICHOTOMY)


@dataclass(frozen=True)
class Level:
    value: int
    weight_sum: Fraction
    multiplicity: int


@dataclass(frozen=True)
class LevelDecomposition:
    levels: tuple[Level, ...]

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(lv.value for lv in self.levels)

    @property
    def weight_sums(self) -> tuple[Fraction, ...]:
        return tuple(lv.weight_sum for lv in self.levels)

    def __len__(self):
        return len(self.levels)

    def moment(self, u: int) -> Fraction:
        return sum((Fraction(lv.value) ** u * lv.weight_sum for lv in self.levels), Fraction(0))


def aggregate_levels(p: FixedPointProfile) -> LevelDecomposition:
    """Group fixed points by line weight; each level carries the sum of ``1/prod(k)`` over its points."""
    require_valid(p)
    sums: dict[int, Fraction] = defaultdict(Fraction)
    counts: dict[int, int] = defaultdict(int)
    for pt in p.points:
        sums[pt.line_weight] += pt.euler_inverse
        counts[pt.line_weight] += 1
    return LevelDecomposition(tuple(Level(s, sums[s], counts[s]) for s in sorted(sums)))


def classify(p: FixedPointProfile) -> Classification:
    require_valid(p)
    counts: dict[int, int] = defaultdict(int)
    for a in p.line_weights:
        counts[a] += 1
    if len(counts) == p.r:
        return Classification.EVERYWHERE
    if 1 in counts.values():
        return Classification.SOMEWHERE_ONLY
    return Classification.NOWHERE


def vandermonde_reconstruct(levels: Sequence[int], moments: Sequence) -> list[Fraction] | Sentinel:
    """Solve ``sum_t s_t**u * A_t = moments[u]`` for ``u < l`` exactly.

    ``moments`` has one entry per available equation (``n`` of them). With
    ``l`` distinct levels and ``l <= n`` the square system is a transposed
    Vandermonde system, solved through the Lagrange basis: ``A_t`` is the
    moment functional applied to the basis polynomial vanishing at every
    other level. Returns ``UNDERDETERMINED`` when ``l > n``.
    """
    s = [int(v) for v in levels]
    if len(set(s)) != len(s):
        raise ValueError("level values must be mutually distinct")
    if len(s) > len(moments):
        return UNDERDETERMINED
    m = [Fraction(v) for v in moments]
    out = []
    for i, si in enumerate(s):
        # coefficients of prod_{j != i} (x - s_j), lowest degree first
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, sj in enumerate(s):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= sj * basis[d + 1]
            denom *= si - sj
        out.append(sum((c * m[u] for u, c in enumerate(basis)), Fraction(0)) / denom)
    return out


@dataclass(frozen=True)
class TheoremReport:
    consistency: ConsistencyReport
    classification: Classification
    chern_top: Fraction
    verdicts: tuple[tuple[str, Status], ...]
    dichotomy_case: str | None = None

    @property
    def vacuous(self) -> bool:
        """Verdicts on data failing the power-sum constraints say nothing about actions."""
        return not self.consistency.consistent

    @property
    def violated(self) -> list[str]:
        return [sid for sid, st in self.verdicts if st is Status.VIOLATED]

    def status(self, statement: str) -> Status:
        return dict(self.verdicts)[statement]


def _implies(applies: bool, holds: bool) -> Status:
    if not applies:
        return Status.NOT_APPLICABLE
    return Status.VERIFIED if holds else Status.VIOLATED


def theorem_report(p: FixedPointProfile) -> TheoremReport:
    """Evaluate the three fixed-point statements on ``p``.

    A violated verdict on consistent data means no smooth circle action can
    produce this profile.
    """
    cons = consistency_check(p)
    cls = classify(p)
    n, r = p.dimension, p.r
    c = cons.chern_top
    enough = r >= n + 1

    v1 = _implies(c != 0, enough)
    v2 = _implies(cons.consistent and cls.somewhere_injective, enough)

    case = None
    if r == n + 1 and cons.consistent:
        case_a = c != 0 and cls is Classification.EVERYWHERE
        case_b = c == 0 and not cls.somewhere_injective
        v3 = Status.VERIFIED if case_a != case_b else Status.VIOLATED
        case = "a" if case_a else "b" if case_b else None
    else:
        v3 = Status.NOT_APPLICABLE

    return TheoremReport(cons, cls, c,
                         ((CHERN_BOUND, v1), (INJECTIVE_BOUND, v2), (DICHOTOMY, v3)),
                         case)
