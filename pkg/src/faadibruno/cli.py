"""``fdb`` command line. Each subcommand makes one library call.

Exit status: 0 success, 1 domain error (bad input, cap exceeded, failed
check), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import checks, cm, coloured, dual, hopf, partitions, series, words
from .arith import format_rational
from .errors import FdbError


def _read_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise FdbError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise FdbError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _jsonable(obj):
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, list):
        return [_jsonable(o) for o in obj]
    return obj


def _pretty(obj):
    if isinstance(obj, dict):
        return "\n".join(f"{k}: {v}" for k, v in obj.items())
    if isinstance(obj, list):
        return "\n".join(_pretty(o) for o in obj) if obj else "(none)"
    return str(obj)


def _cmd_compose(a):
    return series.compose(series.ExpSeries.from_json(_read_json(a.f)), series.ExpSeries.from_json(_read_json(a.g)))


def _cmd_revert(a):
    return series.revert(series.ExpSeries.from_json(_read_json(a.f)))


def _cmd_nseries_compose(a):
    return coloured.nseries_compose(
        coloured.NSeries.from_json(_read_json(a.f)), coloured.NSeries.from_json(_read_json(a.g))
    )


def _cmd_nseries_revert(a):
    return coloured.nseries_revert(coloured.NSeries.from_json(_read_json(a.f)))


def _cmd_partitions(a):
    return partitions.enumerate_partitions(a.n)


def _cmd_cardinality(a):
    return partitions.cardinality_report(a.upto)


def _cmd_stirling(a):
    return partitions.stirling2(a.n, a.k)


def _cmd_check(a):
    return checks.run_check(a.suite, a.upto)


COMMANDS = {
    "compose": (_cmd_compose, "compose two exponential series f o g (JSON files, '-' for stdin)"),
    "revert": (_cmd_revert, "Lagrange reversion of a unital series"),
    "coproduct": (lambda a: hopf.coproduct(a.n), "coproduct of a_n"),
    "antipode": (lambda a: hopf.antipode(a.n), "antipode of a_n (closed Bell formula)"),
    "primitives": (lambda a: hopf.primitive_space(a.degree), "basis of primitives of a given degree"),
    "delta-coproduct": (lambda a: cm.coproduct_delta(a.n, a.route), "coproduct of delta_n"),
    "delta-to-a": (lambda a: cm.delta_in_a(a.n), "delta_n in the a-coordinates"),
    "gamma": (lambda a: words.gamma(a.n, a.route), "Gamma_n in the shuffle algebra"),
    "bracket": (lambda a: dual.b_bracket(a.n, a.m), "[b'_n, b'_m] from the duality recipe"),
    "bell": (lambda a: partitions.bell_partial(a.n, a.k), "symbolic partial Bell polynomial B_{n,k}"),
    "stirling": (_cmd_stirling, "Stirling number of the second kind"),
    "partitions": (_cmd_partitions, "set partitions of {1..n}"),
    "cardinality": (_cmd_cardinality, "partial sums of the groupoid cardinality e^(e-1)"),
    "nseries-compose": (_cmd_nseries_compose, "compose two N-series (JSON files)"),
    "nseries-revert": (_cmd_nseries_revert, "revert an N-series"),
    "check": (_cmd_check, "run a bundled self-check suite"),
}


def build_parser():
    parser = argparse.ArgumentParser(prog="fdb", description="Faa di Bruno Hopf algebra computations")
    parser.add_argument("--format", choices=("json", "pretty"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)
    ps = {name: sub.add_parser(name, help=help_) for name, (_, help_) in COMMANDS.items()}
    for name in ("compose", "nseries-compose"):
        ps[name].add_argument("f")
        ps[name].add_argument("g")
    for name in ("revert", "nseries-revert"):
        ps[name].add_argument("f")
    for name in ("coproduct", "antipode", "delta-coproduct", "delta-to-a", "gamma", "bracket", "bell", "stirling", "partitions"):
        ps[name].add_argument("--n", type=int, required=True)
    ps["bracket"].add_argument("--m", type=int, required=True)
    for name in ("bell", "stirling"):
        ps[name].add_argument("--k", type=int, required=True)
    ps["primitives"].add_argument("--degree", type=int, required=True)
    ps["delta-coproduct"].add_argument("--route", choices=cm.ROUTES, default="subst")
    ps["gamma"].add_argument("--route", choices=words.GAMMA_ROUTES, default="closed")
    ps["cardinality"].add_argument("--upto", type=int, required=True)
    ps["check"].add_argument("--suite", choices=checks.SUITES, required=True)
    ps["check"].add_argument("--upto", type=int, required=True)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        result = COMMANDS[args.command][0](args)
    except FdbError as exc:
        print(f"fdb {args.command}: error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        payload = _jsonable(result)
        if isinstance(payload, int) and not isinstance(payload, bool):
            payload = format_rational(payload)
        out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(_pretty(result) + "\n")
    if args.command == "check" and not result["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
