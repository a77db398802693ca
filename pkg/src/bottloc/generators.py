"""Profiles with independently known answers."""
from __future__ import annotations

from typing import Sequence

from .profile import ALMOST_COMPLEX, FixedPointProfile, PointDatum, require_valid


def cpn(lambdas: Sequence[int], d: int = 1) -> FixedPointProfile:
    """Complex projective space ``CP^n`` with ``O(d)``.

    The circle acts on homogeneous coordinates with exponents ``lambdas``.
    At the i-th coordinate point the tangent weights are ``lambda_j - lambda_i``
    (``j != i``) and the fiber of ``O(d)`` has weight ``-d * lambda_i``, so
    the top Chern number is ``d**n``.
    """
    lambdas = [int(x) for x in lambdas]
    if len(lambdas) < 2:
        raise ValueError("need at least two exponents")
    if len(set(lambdas)) != len(lambdas):
        raise ValueError(f"exponents must be mutually distinct: {lambdas}")
    n = len(lambdas) - 1
    pts = []
    for i, li in enumerate(lambdas):
        k = tuple(lj - li for j, lj in enumerate(lambdas) if j != i)
        pts.append(PointDatum(k, -d * li))
    return FixedPointProfile(n, pts, ALMOST_COMPLEX)


def product(p: FixedPointProfile, q: FixedPointProfile) -> FixedPointProfile:
    """Product action on ``M x N`` with the external tensor product of the two line bundles."""
    require_valid(p)
    require_valid(q)
    if p.flavor != q.flavor:
        raise ValueError(f"flavor mismatch: {p.flavor} vs {q.flavor}")
    pts = [PointDatum(x.tangent_weights + y.tangent_weights, x.line_weight + y.line_weight)
           for x in p.points for y in q.points]
    return FixedPointProfile(p.dimension + q.dimension, pts, p.flavor)


def constant_lift(p: FixedPointProfile, a: int) -> FixedPointProfile:
    """Same tangent data, every line weight equal to ``a`` (a lift on the trivial bundle)."""
    require_valid(p)
    return p.with_line_weights([a] * p.r)
