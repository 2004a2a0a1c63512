"""Command-line front end.

Exit codes: 0 success / isomorphic, 1 not isomorphic, 2 bad input,
3 internal inconsistency (isomorphism tests disagreeing).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .cuntz_krieger import iso_ck
from .io import (
    InputError,
    SCHEMA,
    dual_report,
    dumps,
    format_matrix_text,
    group_to_json,
    invariant_report,
    load_input,
    parse_group_spec,
    parse_matrix_text,
    write_atomic,
)
from .kirchberg import ext_total, iso_by_ext_triple, iso_by_mixed, iso_by_total_ext, iso_triple
from .linalg import smith_normal_form
from .primary import NotRecoverable, recover_pair

EXIT_OK, EXIT_NOT_ISO, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2, 3

TRIPLE_METHODS = {
    "triple": iso_triple,
    "ext-triple": iso_by_ext_triple,
    "total": iso_by_total_ext,
    "mixed": iso_by_mixed,
}


def _emit(args, text: str) -> None:
    if not args.quiet:
        sys.stdout.write(text)


def cmd_invariants(args) -> int:
    inp = load_input(args.input)
    _emit(args, dumps(invariant_report(inp)))
    return EXIT_OK


def cmd_dual(args) -> int:
    inp = load_input(args.input)
    _emit(args, dumps(dual_report(inp)))
    return EXIT_OK


def cmd_iso(args) -> int:
    a, b = load_input(args.a), load_input(args.b)
    both_matrices = a.matrix is not None and b.matrix is not None
    if args.method == "oainv":
        if not both_matrices:
            raise InputError("--method oainv needs two matrix files")
        verdict = iso_ck(a.matrix, b.matrix)
    elif args.method == "all":
        results = {name: f(a.triple, b.triple) for name, f in TRIPLE_METHODS.items()}
        if both_matrices:
            results["oainv"] = iso_ck(a.matrix, b.matrix)
        if len(set(results.values())) != 1:
            detail = ", ".join(f"{k}={v}" for k, v in sorted(results.items()))
            print(f"error: isomorphism tests disagree: {detail}", file=sys.stderr)
            return EXIT_INCONSISTENT
        verdict = next(iter(results.values()))
    else:
        verdict = TRIPLE_METHODS[args.method](a.triple, b.triple)
    _emit(args, ("isomorphic" if verdict else "not-isomorphic") + "\n")
    return EXIT_OK if verdict else EXIT_NOT_ISO


def cmd_classify(args) -> int:
    d = Path(args.directory)
    if not d.is_dir():
        raise InputError(f"{d}: not a directory")
    files = sorted(p for p in d.iterdir() if p.is_file() and not p.name.startswith("."))
    if not files:
        raise InputError(f"{d}: no input files")
    classes: dict[str, dict] = {}
    rejected = []
    for f in files:
        try:
            t = load_input(f).triple
        except InputError as e:
            rejected.append({"file": f.name, "error": str(e)})
            continue
        inv = {"t1": group_to_json(ext_total(t, 1)), "t0": group_to_json(ext_total(t, 0))}
        key = json.dumps(inv, sort_keys=True)
        classes.setdefault(key, {"invariants": inv, "members": []})["members"].append(f.name)
    report = {
        "schema": SCHEMA,
        "tool": {"name": "kinvariants", "version": __version__},
        "classes": [classes[k] for k in sorted(classes)],
        "rejected": rejected,
    }
    text = dumps(report)
    if args.out:
        write_atomic(args.out, text)
    _emit(args, text)
    if not classes:
        print("error: no file could be classified", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def cmd_snf(args) -> int:
    try:
        text = Path(args.input).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"{args.input}: {e.strerror}") from None
    M = parse_matrix_text(text, square=False)
    res = smith_normal_form(M)
    out = "D: " + " ".join(map(str, res.diagonal)) + "\n"
    if args.transforms:
        out += "U:\n" + format_matrix_text(res.U) + "V:\n" + format_matrix_text(res.V)
    _emit(args, out)
    return EXIT_OK


def cmd_recover(args) -> int:
    D = parse_group_spec(args.group)
    try:
        G, Q = recover_pair(D, realize=args.realize)
    except NotRecoverable as e:
        raise InputError(str(e)) from None
    doc = {"schema": SCHEMA, "sum": group_to_json(D), "G": group_to_json(G), "Q": group_to_json(Q)}
    _emit(args, dumps(doc))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", help="print nothing, only set the exit code")

    parser = argparse.ArgumentParser(
        prog="kinvariants",
        description="K-theoretic invariants of Cuntz-Krieger and unital Kirchberg algebras.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="full invariant report")
    p.add_argument("input", help="matrix text file or triple .json file")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("iso", parents=[common], help="decide isomorphism")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument(
        "--method",
        choices=[*TRIPLE_METHODS, "oainv", "all"],
        default="all",
    )
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("dual", parents=[common], help="K-triple of the reciprocal dual")
    p.add_argument("input")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("classify", parents=[common], help="partition a directory into classes")
    p.add_argument("directory")
    p.add_argument("--out", help="write the JSON report here (atomically)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("snf", parents=[common], help="Smith normal form of an integer matrix")
    p.add_argument("input", help="header 'N' or 'R C', then rows of integers")
    p.add_argument("--transforms", action="store_true", help="also print U and V")
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("recover", parents=[common], help="split G + G/Zg into (G, G/Zg)")
    p.add_argument("group", help='e.g. "Z + Z/4 + Z/2"')
    p.add_argument("--realize", action="store_true", help="also require a witness element g")
    p.set_defaults(func=cmd_recover)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
