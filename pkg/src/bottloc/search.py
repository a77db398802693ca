"""Bounded exhaustive search for profiles satisfying the power-sum constraints.

Profiles are built as multisets of points. Tangent data is fixed first and
filtered by the degree-zero constraint ``sum 1/prod(k) = 0``; line weights
are then assigned (minimum pinned to 0) and checked against the remaining
constraints. Survivors are canonicalized, deduplicated and sorted, so the
output does not depend on how the tree was split across workers.
"""
from __future__ import annotations

import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Iterable, Iterator

from .injectivity import DICHOTOMY, STATEMENTS, Status, theorem_report
from .localize import consistency_check
from .profile import (ALMOST_COMPLEX, FLAVORS, ORIENTED, FixedPointProfile, PointDatum,
                      canonicalize, oriented_representative)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchSpec:
    dimension: int
    points: int
    tangent_bound: int
    line_bound: int
    flavor: str = ALMOST_COMPLEX

    def __post_init__(self):
        if self.dimension < 1 or self.points < 1 or self.tangent_bound < 1 or self.line_bound < 0:
            raise ValueError(f"search bounds out of range: {self}")
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")


def tangent_options(n: int, bound: int, flavor: str = ALMOST_COMPLEX) -> list[tuple[int, ...]]:
    """One representative per equivalence class of a single point's tangent weights."""
    if flavor == ORIENTED:
        reps = set()
        for mags in itertools.combinations_with_replacement(range(1, bound + 1), n):
            reps.add(oriented_representative(mags))
            reps.add(oriented_representative((-mags[0],) + mags[1:]))
        return sorted(reps)
    values = [k for k in range(-bound, bound + 1) if k != 0]
    return list(itertools.combinations_with_replacement(values, n))


class _Tree:
    """Shared per-spec tables for the search."""

    def __init__(self, spec: SearchSpec):
        self.spec = spec
        self.options = tangent_options(spec.dimension, spec.tangent_bound, spec.flavor)
        self.inverse = [Fraction(1, prod(k)) for k in self.options]
        m = len(self.options)
        self.suffix_lo = [Fraction(0)] * m
        self.suffix_hi = [Fraction(0)] * m
        lo = hi = None
        for i in range(m - 1, -1, -1):
            w = self.inverse[i]
            lo = w if lo is None else min(lo, w)
            hi = w if hi is None else max(hi, w)
            self.suffix_lo[i], self.suffix_hi[i] = lo, hi

    def tangent_multisets(self, first: int) -> Iterator[tuple[int, ...]]:
        """Nondecreasing option-index tuples starting with ``first`` whose degree-zero sum vanishes."""
        r = self.spec.points
        chosen = [first]

        def rec(start: int, partial: Fraction):
            left = r - len(chosen)
            if left == 0:
                if partial == 0:
                    yield tuple(chosen)
                return
            # the remaining points all come from options[start:]
            if not (left * self.suffix_lo[start] <= -partial <= left * self.suffix_hi[start]):
                return
            for i in range(start, len(self.options)):
                chosen.append(i)
                yield from rec(i, partial + self.inverse[i])
                chosen.pop()

        yield from rec(first, self.inverse[first])

    def line_assignments(self, idx: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        """Line weights in ``[0, A]`` with minimum 0, nondecreasing across points with equal tangent data."""
        r, top = len(idx), self.spec.line_bound
        a = [0] * r

        def rec(pos: int):
            if pos == r:
                if min(a) == 0:
                    yield tuple(a)
                return
            lo = a[pos - 1] if pos and idx[pos] == idx[pos - 1] else 0
            for v in range(lo, top + 1):
                a[pos] = v
                yield from rec(pos + 1)

        yield from rec(0)

    def branch(self, first: int) -> list[FixedPointProfile]:
        n = self.spec.dimension
        found = {}
        for idx in self.tangent_multisets(first):
            w = [self.inverse[i] for i in idx]
            for a in self.line_assignments(idx):
                if any(sum(wi * ai ** t for wi, ai in zip(w, a)) != 0 for t in range(1, n)):
                    continue
                p = canonicalize(FixedPointProfile(
                    n, [PointDatum(self.options[i], ai) for i, ai in zip(idx, a)], self.spec.flavor))
                found[p.sort_key()] = p
        return list(found.values())


def _run_branch(args) -> list[FixedPointProfile]:
    spec, first = args
    return _Tree(spec).branch(first)


def _merge(batches: Iterable[list[FixedPointProfile]]) -> list[FixedPointProfile]:
    merged = {}
    for batch in batches:
        for p in batch:
            merged[p.sort_key()] = p
    return [merged[k] for k in sorted(merged)]


def enumerate_consistent(spec: SearchSpec, workers: int = 1) -> list[FixedPointProfile]:
    """Canonical representatives of every bounded profile satisfying the power-sum constraints.

    The tree is split by the first point's tangent class; ``workers`` only
    changes wall time.
    """
    tree = _Tree(spec)
    firsts = range(len(tree.options))
    if workers <= 1:
        batches = (tree.branch(i) for i in firsts)
        return _merge(batches)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return _merge(pool.map(_run_branch, [(spec, i) for i in firsts]))


def brute_force_enumerate(spec: SearchSpec) -> list[FixedPointProfile]:
    """Unpruned reference enumerator over ordered tuples of raw points; only for tiny bounds."""
    n, B = spec.dimension, spec.tangent_bound
    values = [k for k in range(-B, B + 1) if k != 0]
    raw_points = [PointDatum(k, a)
                  for k in itertools.product(values, repeat=n)
                  for a in range(spec.line_bound + 1)]
    found = {}
    for pts in itertools.product(raw_points, repeat=spec.points):
        p = FixedPointProfile(n, pts, spec.flavor)
        if consistency_check(p).consistent:
            c = canonicalize(p)
            found[c.sort_key()] = c
    return [found[k] for k in sorted(found)]


@dataclass
class AuditReport:
    total: int = 0
    inconsistent: int = 0
    verdicts: dict = field(default_factory=lambda: {s: Counter() for s in STATEMENTS})
    dichotomy_cases: Counter = field(default_factory=Counter)
    classifications: Counter = field(default_factory=Counter)
    counterexample: FixedPointProfile | None = None
    counterexample_statements: tuple[str, ...] = ()

    @property
    def violations(self) -> int:
        return sum(c[Status.VIOLATED] for c in self.verdicts.values())

    @property
    def clean(self) -> bool:
        return self.violations == 0 and self.inconsistent == 0

    def as_dict(self) -> dict:
        return {
            "total": self.total,
            "inconsistent": self.inconsistent,
            "violations": self.violations,
            "verdicts": {s: {st.value: c[st] for st in Status} for s, c in self.verdicts.items()},
            "dichotomy_cases": {k: self.dichotomy_cases[k] for k in ("a", "b")},
            "classifications": dict(sorted((k.value, v) for k, v in self.classifications.items())),
        }


def catalog_audit(profiles: Iterable[FixedPointProfile]) -> AuditReport:
    """Run the theorem checks over a catalog and tally the verdicts.

    Profiles failing the power-sum constraints are counted separately; their
    verdicts are vacuous and not tallied.
    """
    report = AuditReport()
    for p in profiles:
        report.total += 1
        tr = theorem_report(p)
        if tr.vacuous:
            report.inconsistent += 1
            log.warning("catalog entry %d fails the power-sum constraints", report.total)
            continue
        report.classifications[tr.classification] += 1
        for sid, status in tr.verdicts:
            report.verdicts[sid][status] += 1
        if tr.status(DICHOTOMY) is Status.VERIFIED:
            report.dichotomy_cases[tr.dichotomy_case] += 1
        if tr.violated and report.counterexample is None:
            report.counterexample = p
            report.counterexample_statements = tuple(tr.violated)
    return report
