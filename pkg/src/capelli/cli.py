"""Command line: eigenvalues, eigenvalue polynomials, strips, verification
suites and eigenvalue tables. All numbers are printed as exact rationals."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .central import CentralSpec, NoClosedForm, eigenvalue_action, eigenvalue_closed, parse_spec
from .partitions import (
    Partition,
    all_permutations,
    conjugate,
    format_partition,
    gamma_statistic,
    horizontal_strips,
    pad,
    parse_partition,
    partitions_up_to,
    vertical_strips,
)
from .shifted import chi
from .suites import SUITES, run_suite

MAX_CELLS = 12
MAX_N = 6


class UsageError(Exception):
    pass


def _num(q: Fraction | int) -> str:
    return str(Fraction(q))


def _max_cells() -> int:
    raw = os.environ.get("CAPELLI_MAX_CELLS")
    if raw is None:
        return MAX_CELLS
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"CAPELLI_MAX_CELLS must be an integer, got {raw!r}") from None


def _guard(args, cells: int = 0) -> None:
    if args.force:
        return
    limit = _max_cells()
    if cells > limit:
        raise UsageError(f"{cells} cells exceeds the limit of {limit}; pass --force or set CAPELLI_MAX_CELLS")
    n = getattr(args, "n", None)
    if n is not None and n > MAX_N:
        raise UsageError(f"n={n} exceeds the limit of {MAX_N}; pass --force")


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from None


def _spec(text: str, n: int) -> CentralSpec:
    try:
        return parse_spec(text, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _check_fits(mu: Partition, n: int) -> None:
    if mu and mu[0] > n:
        raise UsageError(f"first part of {format_partition(mu)} exceeds n={n}")


def _routes(spec: CentralSpec, mu: Partition) -> dict[str, Fraction]:
    routes = {"action": eigenvalue_action(spec, mu)}
    try:
        routes["closed"] = eigenvalue_closed(spec, mu)
    except NoClosedForm:
        pass
    if spec.family == "H":
        routes["strips"] = Fraction(sum(s.factor for s in horizontal_strips(mu, spec.k)))
        if spec.k <= spec.n:
            routes["gamma"] = Fraction(
                sum(
                    gamma_statistic(mu, idx, sigma)
                    for idx in combinations(range(1, spec.n + 1), spec.k)
                    for sigma in all_permutations(idx)
                )
            )
    elif spec.family == "I":
        routes["strips"] = Fraction(sum(s.factor for s in vertical_strips(mu, spec.k)))
    return routes


def _emit(rows: list[dict], fmt: str, fields: Sequence[str]) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue().rstrip("\n")


def cmd_eig(args) -> int:
    mu = _partition(args.mu)
    _guard(args, mu.weight)
    _check_fits(mu, args.n)
    spec = _spec(args.spec, args.n)
    routes = _routes(spec, mu)
    agree = len(set(routes.values())) == 1
    out = {
        "spec": str(spec),
        "mu": format_partition(mu),
        "n": args.n,
        "value": _num(routes["action"]),
        "routes": {k: _num(v) for k, v in routes.items()},
        "agree": agree,
    }
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        row = {"spec": out["spec"], "mu": out["mu"], "n": args.n, "value": out["value"], "agree": agree}
        row.update({f"route_{k}": v for k, v in out["routes"].items()})
        print(_emit([row], "csv", list(row)))
    if not agree:
        print(f"routes disagree: {out['routes']}", file=sys.stderr)
        return 1
    return 0


def cmd_chi(args) -> int:
    spec = _spec(args.spec, args.n)
    _guard(args, spec.degree)
    poly = chi(spec)
    if args.format == "json":
        print(json.dumps({"spec": str(spec), "n": args.n, "terms": poly.to_json_obj(), "text": str(poly)}, indent=2))
    else:
        fields = [f"x{i}" for i in range(1, args.n + 1)] + ["coeff"]
        rows = [dict(zip(fields, [*m, _num(c)])) for m, c in poly.sorted_terms()]
        print(_emit(rows, "csv", fields))
    return 0


def cmd_strips(args) -> int:
    mu = _partition(args.mu)
    _guard(args, mu.weight)
    if args.k < 0:
        raise UsageError("k must be nonnegative")
    strips = horizontal_strips(mu, args.k) if args.kind == "horizontal" else vertical_strips(mu, args.k)
    rows = [
        {"cells": " ".join(f"{r},{c}" for r, c in sorted(s.cells)), "factor": str(s.factor)}
        for s in sorted(strips, key=lambda s: sorted(s.cells))
    ]
    if args.format == "json":
        total = sum(int(r["factor"]) for r in rows)
        print(json.dumps({"mu": format_partition(mu), "k": args.k, "kind": args.kind,
                          "count": len(rows), "total": str(total), "strips": rows}, indent=2))
    else:
        print(_emit(rows, "csv", ["cells", "factor"]))
    return 0


def cmd_verify(args) -> int:
    if args.max_weight is not None:
        _guard(args, args.max_weight)
    else:
        _guard(args)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [run_suite(name, n=args.n, max_weight=args.max_weight) for name in names]
    ok = all(r.passed for r in reports)
    if args.format == "json":
        print(json.dumps([r.to_json_obj() for r in reports], indent=2))
    else:
        rows = [{"suite": r.suite, "passed": r.passed, "checks": len(r.checks),
                 "failures": len(r.failures())} for r in reports]
        print(_emit(rows, "csv", ["suite", "passed", "checks", "failures"]))
    return 0 if ok else 1


def cmd_table(args) -> int:
    _guard(args, args.max_weight)
    specs = [_spec(s, args.n) for s in args.spec]
    mus = [mu for mu in partitions_up_to(args.max_weight, max_part=args.n)]
    rows = []
    for mu in mus:
        row = {"mu": format_partition(mu), "weight": ",".join(map(str, pad(conjugate(mu), args.n)))}
        for spec in specs:
            row[str(spec)] = _num(eigenvalue_action(spec, mu))
        rows.append(row)
    print(_emit(rows, args.format, ["mu", "weight"] + [str(s) for s in specs]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="capelli", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, n_default: int | None = 3):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--force", action="store_true", help="lift the size guards")
        if n_default is not None:
            p.add_argument("--n", type=int, default=n_default, help="rank of gl(n)")

    p = sub.add_parser("eig", help="eigenvalue of a central element on a highest weight vector")
    p.add_argument("--spec", required=True, help='e.g. "H:2", "I:3", "S:2,1", "H:1*I:2", "1"')
    p.add_argument("--mu", default="", help="shape, e.g. 3,2 (empty for the trivial module)")
    common(p)
    p.set_defaults(func=cmd_eig)

    p = sub.add_parser("chi", help="eigenvalue polynomial as a shifted symmetric polynomial")
    p.add_argument("--spec", required=True)
    common(p)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("strips", help="horizontal or vertical strips of a diagram")
    p.add_argument("--mu", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", choices=("horizontal", "vertical"), default="horizontal")
    common(p, n_default=None)
    p.set_defaults(func=cmd_strips)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=[*SUITES, "all"])
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="eigenvalue table over all shapes up to a weight")
    p.add_argument("--spec", required=True, action="append", help="repeat for several columns")
    p.add_argument("--max-weight", type=int, default=4)
    common(p)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 1:
        parser.error("n must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"capelli: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"capelli: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
