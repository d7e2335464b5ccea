"""Batch front-end: JSON in, JSON/DOT out.

Exit codes: 0 success, 1 domain errors (axiom failures, invalid hints,
irrational eigenvalues, ...), 2 I/O or parse errors.  All diagnostics go to
stderr; all data to stdout or the --output file.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import serialize
from .algebra import check_axioms, from_matrices, is_basic, killing_radical
from .errors import ColorLieError
from .families import SoParams, so_cartan_hint, so_pqrs
from .roots import (
    enhanced_dynkin,
    find_cartan,
    is_self_centralizing,
    positive_and_simple,
    root_decomposition,
    weyl_group,
)


def _read_json(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _write_text(text: str, path: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _emit_json(doc: dict, path: str) -> None:
    _write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", path)


def _parse_order(text):
    if text is None:
        return None
    return [Fraction(part) for part in text.split(",")]


def _load_algebra(path: str):
    doc = _read_json(path)
    g = serialize.algebra_from_json(doc)
    hint = serialize.cartan_hint_from_json(doc)
    return g, hint


def _root_pipeline(g, hint, seed, order):
    t = find_cartan(g, hint=hint, seed=seed)
    rs = root_decomposition(g, t)
    return positive_and_simple(rs, order=order)


def _cmd_validate(args) -> int:
    g, _ = _load_algebra(args.input)
    report = check_axioms(g)
    doc = {"axioms": list(report.lines()), "ok": report.ok}
    if report.ok:
        doc["killingRadicalDim"] = len(killing_radical(g))
        doc["basic"] = is_basic(g)
    _emit_json(doc, args.output)
    if not report.ok:
        for line in report.lines():
            if "FAIL" in line:
                print(f"validate: {line}", file=sys.stderr)
        return 1
    return 0


def _cmd_roots(args) -> int:
    g, hint = _load_algebra(args.input)
    rs = _root_pipeline(g, hint, args.seed, _parse_order(args.order))
    enhanced = None
    if is_self_centralizing(rs):
        enhanced = enhanced_dynkin(rs, g)
    weyl = weyl_group(rs)
    _emit_json(serialize.root_system_report(rs, enhanced=enhanced, weyl=weyl),
               args.output)
    return 0


def _cmd_dynkin(args) -> int:
    g, hint = _load_algebra(args.input)
    rs = _root_pipeline(g, hint, args.seed, _parse_order(args.order))
    ed = enhanced_dynkin(rs, g)
    if args.dot:
        _write_text(serialize.dynkin_dot(ed), args.output)
    else:
        _emit_json(serialize.enhanced_dynkin_report(ed), args.output)
    return 0


def _cmd_rep_decompose(args) -> int:
    from .reps import decompose

    g, hint = _load_algebra(args.algebra)
    rep = serialize.representation_from_json(_read_json(args.input), g)
    rs = _root_pipeline(g, hint, args.seed, _parse_order(args.order))
    components = decompose(rep, rs)
    _emit_json(serialize.decomposition_report(components), args.output)
    return 0


def _cmd_casimir(args) -> int:
    from .reps import casimir_matrix, decompose

    g, hint = _load_algebra(args.algebra)
    rep = serialize.representation_from_json(_read_json(args.input), g)
    omega = casimir_matrix(rep)
    central = all(
        not ((omega @ m) - (m @ omega)) for m in rep.matrices
    )
    rs = _root_pipeline(g, hint, args.seed, _parse_order(args.order))
    components = decompose(rep, rs)
    doc = {
        "central": central,
        "components": serialize.decomposition_report(components)["components"],
    }
    _emit_json(doc, args.output)
    return 0 if central else 1


def _cmd_generate(args) -> int:
    if args.family != "so":
        raise ColorLieError(f"unknown family {args.family!r}")
    params = SoParams(args.p, args.q, args.r, args.s)
    real = so_pqrs(params)
    g = from_matrices(real)
    hint = so_cartan_hint(params)
    _emit_json(serialize.algebra_to_json(g, cartan_hint=hint), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorlie",
        description="Exact computations with Z2xZ2-graded color Lie algebras",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", nargs="?", default="-",
                           help="algebra/representation JSON file, or - for stdin")
        p.add_argument("-o", "--output", default="-",
                       help="output file, or - for stdout")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for the Cartan auto-search")
        p.add_argument("--order", default=None,
                       help="positive-system order: comma-separated rationals")

    p = sub.add_parser("validate", help="axiom + basic-ness report")
    common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("roots", help="root-system report")
    common(p)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("dynkin", help="enhanced Dynkin diagram")
    common(p)
    p.add_argument("--enhanced", action="store_true",
                   help="accepted for compatibility; diagrams are always enhanced")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.set_defaults(func=_cmd_dynkin)

    p = sub.add_parser("rep-decompose", help="complete-reducibility decomposition")
    common(p)
    p.add_argument("--algebra", required=True, help="algebra JSON file")
    p.set_defaults(func=_cmd_rep_decompose)

    p = sub.add_parser("casimir", help="Casimir centrality + component eigenvalues")
    common(p)
    p.add_argument("--algebra", required=True, help="algebra JSON file")
    p.set_defaults(func=_cmd_casimir)

    p = sub.add_parser("generate", help="construct a classical family")
    common(p, needs_input=False)
    p.add_argument("--family", required=True, choices=["so"])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=_cmd_generate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ColorLieError, AssertionError) as e:
        print(f"{args.verb}: {e}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        print(f"{args.verb}: input error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
