"""Command-line interface.

Exit codes: 0 success with every check passing, 1 well-formed input that
fails a check, 2 malformed input or usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .exact import NOT_LAURENT
from .generators import cpn, product
from .genus import dolbeault_character, todd_genus
from .injectivity import aggregate_levels, classify, theorem_report
from .io import (ProfileFormatError, dumps, parse_profile, profile_from_obj, rational_to_json,
                 serialize_profile)
from .localize import chern_top
from .profile import ALMOST_COMPLEX, FLAVORS, FlavorError, determinant_lift
from .search import SearchSpec, catalog_audit, enumerate_consistent

EXIT_OK, EXIT_CHECK_FAILED, EXIT_MALFORMED = 0, 1, 2


class InputError(Exception):
    pass


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load_profile(path: str):
    try:
        return parse_profile(_read_text(path))
    except ProfileFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(args, obj, lines):
    if args.json:
        print(dumps(obj))
    else:
        for line in lines:
            print(line)


def cmd_check(args) -> int:
    p = _load_profile(args.file)
    rep = theorem_report(p)
    cons = rep.consistency
    obj = {
        "consistent": cons.consistent,
        "moments": [{"t": m.t, "value": rational_to_json(m.value), "passed": m.passed}
                    for m in cons.moments],
        "chern_top": rational_to_json(rep.chern_top),
        "integral": cons.integral,
        "classification": rep.classification.value,
        "verdicts": [{"statement": sid, "status": st.value} for sid, st in rep.verdicts],
        "dichotomy_case": rep.dichotomy_case,
        "vacuous": rep.vacuous,
    }
    lines = [f"n = {p.dimension}, r = {p.r}, flavor = {p.flavor}"]
    for m in cons.moments:
        lines.append(f"  power sum t={m.t}: {m.value}  {'ok' if m.passed else 'FAIL'}")
    lines.append(f"chern_top: {rep.chern_top}")
    if cons.warning:
        lines.append(f"warning: {cons.warning}")
    lines.append(f"classification: {rep.classification.value}")
    for sid, st in rep.verdicts:
        extra = f" (case {rep.dichotomy_case})" if sid == "dichotomy" and rep.dichotomy_case else ""
        lines.append(f"  {sid}: {st.value}{extra}")
    if rep.vacuous:
        lines.append("profile fails the power-sum constraints; verdicts are vacuous")
    _emit(args, obj, lines)
    return EXIT_OK if cons.consistent and not rep.violated else EXIT_CHECK_FAILED


def cmd_chern(args) -> int:
    p = _load_profile(args.file)
    c = chern_top(p)
    _emit(args, {"chern_top": rational_to_json(c)}, [str(c)])
    return EXIT_OK


def cmd_classify(args) -> int:
    p = _load_profile(args.file)
    cls = classify(p)
    levels = aggregate_levels(p)
    obj = {
        "classification": cls.value,
        "levels": [{"value": lv.value, "weight_sum": rational_to_json(lv.weight_sum),
                    "multiplicity": lv.multiplicity} for lv in levels.levels],
    }
    lines = [cls.value, f"{'s':>8} {'A':>12} {'mult':>5}"]
    lines += [f"{lv.value:>8} {str(lv.weight_sum):>12} {lv.multiplicity:>5}" for lv in levels.levels]
    _emit(args, obj, lines)
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_gen_cpn(args) -> int:
    try:
        p = cpn(args.lambdas, args.power)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.det_lift:
        p = determinant_lift(p)
    print(serialize_profile(p))
    return EXIT_OK


def cmd_gen_product(args) -> int:
    p, q = _load_profile(args.first), _load_profile(args.second)
    try:
        print(serialize_profile(product(p, q)))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return EXIT_OK


def catalog_lines(spec: SearchSpec, profiles) -> list[str]:
    lines = [serialize_profile(p) for p in profiles]
    lines.append(dumps({"summary": {
        "count": len(profiles), "dimension": spec.dimension, "points": spec.points,
        "tangent_bound": spec.tangent_bound, "line_bound": spec.line_bound,
        "flavor": spec.flavor}}))
    return lines


def cmd_search(args) -> int:
    try:
        spec = SearchSpec(args.dim, args.points, args.tangent_bound, args.line_bound, args.flavor)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    found = enumerate_consistent(spec, workers=args.workers)
    text = "\n".join(catalog_lines(spec, found)) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"{len(found)} profiles written to {args.out}")
    return EXIT_OK


def read_catalog(text: str, name: str = "catalog"):
    profiles = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise InputError(f"{name}: line {lineno} column {exc.colno}: {exc.msg}") from None
        if isinstance(obj, dict) and set(obj) == {"summary"}:
            continue
        try:
            profiles.append(profile_from_obj(obj, where=f"line {lineno}"))
        except ProfileFormatError as exc:
            raise InputError(f"{name}: {exc}") from None
    return profiles


def cmd_audit(args) -> int:
    profiles = read_catalog(_read_text(args.catalog), args.catalog)
    rep = catalog_audit(profiles)
    obj = rep.as_dict()
    if rep.counterexample is not None:
        obj["counterexample"] = json.loads(serialize_profile(rep.counterexample))
        obj["counterexample_statements"] = list(rep.counterexample_statements)
    lines = [f"profiles: {rep.total}", f"inconsistent: {rep.inconsistent}",
             f"violations: {rep.violations}"]
    for sid, counts in obj["verdicts"].items():
        lines.append(f"  {sid}: " + ", ".join(f"{k}={v}" for k, v in counts.items()))
    lines.append(f"dichotomy cases: a={rep.dichotomy_cases['a']} b={rep.dichotomy_cases['b']}")
    if rep.counterexample is not None:
        lines.append("counterexample: " + serialize_profile(rep.counterexample))
    _emit(args, obj, lines)
    return EXIT_OK if rep.clean else EXIT_CHECK_FAILED


def cmd_genus(args) -> int:
    p = _load_profile(args.file)
    if p.flavor != ALMOST_COMPLEX:
        raise InputError(f"{args.file}: the genus command needs an almost-complex profile")
    ch = dolbeault_character(p)
    td = todd_genus(p)
    obj = {
        "character": {"numerator": [[e, rational_to_json(c)] for e, c in ch.numerator.terms],
                      "denominator": [[e, rational_to_json(c)] for e, c in ch.denominator.terms]},
        "todd_genus": None if td is NOT_LAURENT else td,
        "laurent": td is not NOT_LAURENT,
    }
    lines = [f"character: {ch}", f"todd genus: {'NotLaurent' if td is NOT_LAURENT else td}"]
    _emit(args, obj, lines)
    return EXIT_CHECK_FAILED if td is NOT_LAURENT else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bottloc", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def with_file(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", help="profile JSON, or - for stdin")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=fn)
        return sp

    with_file("check", cmd_check, "power-sum constraints and fixed-point verdicts")
    with_file("chern", cmd_chern, "top Chern number of the line bundle")
    with_file("classify", cmd_classify, "injectivity class and level table")
    with_file("genus", cmd_genus, "Dolbeault character and Todd genus")

    gen = sub.add_parser("gen", help="generate reference profiles")
    gsub = gen.add_subparsers(dest="generator", required=True)
    g = gsub.add_parser("cpn", help="CP^n with O(d)")
    g.add_argument("--lambdas", type=_int_list, required=True)
    g.add_argument("--power", type=int, default=1)
    g.add_argument("--det-lift", action="store_true", help="use the anticanonical lift instead")
    g.set_defaults(func=cmd_gen_cpn)
    g = gsub.add_parser("product", help="product of two profiles")
    g.add_argument("first")
    g.add_argument("second")
    g.set_defaults(func=cmd_gen_product)

    s = sub.add_parser("search", help="enumerate bounded profiles passing the constraints")
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--points", type=int, required=True)
    s.add_argument("--tangent-bound", type=int, required=True)
    s.add_argument("--line-bound", type=int, required=True)
    s.add_argument("--flavor", choices=FLAVORS, default=ALMOST_COMPLEX)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--out", required=True, help="catalog path, or - for stdout")
    s.set_defaults(func=cmd_search)

    a = sub.add_parser("audit", help="audit a search catalog")
    a.add_argument("catalog")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_audit)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, FlavorError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
