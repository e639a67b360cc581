"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .bench import bench, format_bench
from .families import (DEFAULT_OP, FAMILIES, FamilySpec, build_matrix, element_to_json,
                       format_entry, matrix_to_json, render_matrix)
from .hessenberg import ORACLE_BOUND, det_hessenberg, per_hessenberg
from .sequences import fib_poly
from .verify import run_verify


class UsageError(Exception):
    pass


def _family_spec(args) -> FamilySpec:
    try:
        return FamilySpec(args.family, args.k, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(value, fmt: str):
    if fmt == "json":
        print(json.dumps(element_to_json(value), indent=2))
    else:
        print(format_entry(value))


def cmd_genpoly(args) -> int:
    if args.k < 2:
        raise UsageError(f"k must be at least 2, got {args.k}")
    if args.n < 0:
        raise UsageError(f"n must be nonnegative, got {args.n}")
    _emit(fib_poly(args.k, args.n), args.format)
    return 0


def cmd_matrix(args) -> int:
    spec = _family_spec(args)
    A = build_matrix(spec)
    if args.format == "json":
        print(json.dumps(matrix_to_json(spec, A), indent=2))
    else:
        print(render_matrix(A))
    return 0


def cmd_eval(args) -> int:
    spec = _family_spec(args)
    op = args.op or DEFAULT_OP[spec.family]
    A = build_matrix(spec)
    _emit(det_hessenberg(A) if op == "det" else per_hessenberg(A), args.format)
    return 0


def cmd_verify(args) -> int:
    if not 2 <= args.k_min <= args.k_max:
        raise UsageError("need 2 <= --k-min <= --k-max")
    if args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    families = args.families.split(",") if args.families else None
    try:
        report = run_verify(args.k_min, args.k_max, args.n_max, families, seed=args.seed, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.to_text())
    return report.exit_status


def cmd_bench(args) -> int:
    if args.k < 2:
        raise UsageError(f"k must be at least 2, got {args.k}")
    if args.family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}")
    rows = bench(args.k, args.n_max, args.family, args.bound)
    if args.format == "json":
        print(json.dumps([asdict(r) for r in rows], indent=2))
    else:
        print(format_bench(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hessfib", description=(
        "Hessenberg determinants and permanents of generalized Fibonacci polynomials."))
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("genpoly", help="print the generalized Fibonacci polynomial F(k, n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_genpoly)

    for name, func, help_ in (("matrix", cmd_matrix, "print a family member"),
                              ("eval", cmd_eval, "determinant or permanent of a family member")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--family", required=True, choices=FAMILIES)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        if name == "eval":
            p.add_argument("--op", choices=("det", "per"), default=None,
                           help="defaults to det for Q, B, C, M and per for H, L, D")
        fmt(p)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="check all identities on a parameter grid")
    p.add_argument("--k-min", type=int, default=2)
    p.add_argument("--k-max", type=int, default=5)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--families", default=None, help="comma-separated subset of " + ",".join(FAMILIES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="operation counts: recursion against brute force")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--family", default="Q", choices=FAMILIES)
    p.add_argument("--bound", type=int, default=ORACLE_BOUND)
    fmt(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hessfib {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
