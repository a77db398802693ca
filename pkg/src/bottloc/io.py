"""JSON interchange for profiles, rationals and reports."""
from __future__ import annotations

import json
from fractions import Fraction

from .profile import FLAVORS, FixedPointProfile, PointDatum, validate


class ProfileFormatError(ValueError):
    """Malformed profile text; the message names the offending position."""


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def rational_to_json(x) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rational_from_json(obj) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def profile_to_obj(p: FixedPointProfile) -> dict:
    return {
        "dimension": p.dimension,
        "flavor": p.flavor,
        "points": [{"tangent_weights": list(pt.tangent_weights), "line_weight": pt.line_weight}
                   for pt in p.points],
    }


def serialize_profile(p: FixedPointProfile) -> str:
    """Canonical single-line JSON: sorted keys, no optional whitespace."""
    return dumps(profile_to_obj(p))


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def profile_from_obj(obj, where: str = "$") -> FixedPointProfile:
    if not isinstance(obj, dict):
        raise ProfileFormatError(f"{where}: expected an object")
    for key in ("dimension", "points"):
        if key not in obj:
            raise ProfileFormatError(f"{where}: missing key {key!r}")
    extra = set(obj) - {"dimension", "flavor", "points"}
    if extra:
        raise ProfileFormatError(f"{where}: unexpected keys {sorted(extra)}")
    n = obj["dimension"]
    if not _is_int(n) or n < 1:
        raise ProfileFormatError(f"{where}.dimension: expected a positive integer")
    flavor = obj.get("flavor", "almost-complex")
    if flavor not in FLAVORS:
        raise ProfileFormatError(f"{where}.flavor: expected one of {list(FLAVORS)}")
    raw = obj["points"]
    if not isinstance(raw, list) or not raw:
        raise ProfileFormatError(f"{where}.points: expected a nonempty list")
    pts = []
    for i, pt in enumerate(raw):
        at = f"{where}.points[{i}]"
        if not isinstance(pt, dict) or set(pt) != {"tangent_weights", "line_weight"}:
            raise ProfileFormatError(f"{at}: expected keys 'line_weight' and 'tangent_weights'")
        k = pt["tangent_weights"]
        if not isinstance(k, list) or not all(_is_int(x) for x in k):
            raise ProfileFormatError(f"{at}.tangent_weights: expected a list of integers")
        if not _is_int(pt["line_weight"]):
            raise ProfileFormatError(f"{at}.line_weight: expected an integer")
        if len(k) != n:
            raise ProfileFormatError(f"{at}.tangent_weights: expected {n} weights, got {len(k)}")
        for j, x in enumerate(k):
            if x == 0:
                raise ProfileFormatError(f"{at}.tangent_weights[{j}]: zero tangent weight")
        pts.append(PointDatum(tuple(k), pt["line_weight"]))
    p = FixedPointProfile(n, pts, flavor)
    problems = validate(p)
    if problems:
        raise ProfileFormatError(f"{where}: " + "; ".join(problems))
    return p


def parse_profile(text: str) -> FixedPointProfile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProfileFormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return profile_from_obj(obj)
