"""Command-line interface.

Exit codes: 0 success, 1 invalid input or a law that fails, 2 usage error,
3 a cap was hit before an answer was found.
"""

from __future__ import annotations

import argparse
import sys

from .closure import DEFAULT_CAP, group_order
from .errors import QuandleError, SearchBudgetExceeded
from .euler import EulerReport, euler_graph_fast, euler_with_search
from .jsonspec import GRAPH_TYPES, dumps, parse_spec, quandle_to_json, resolve, resolve_graph_spec
from .quandle import DEFAULT_NODE_BUDGET, direct_product, free_union, is_connected, is_homogeneous, is_trivial

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class _Invalid(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _describe(exc: Exception) -> str:
    where = getattr(exc, "spec_path", None)
    return f"{where}: {exc}" if where else str(exc)


def _load(path: str):
    try:
        text = _read(path)
    except OSError as exc:
        raise _Invalid(f"{path}: {exc.strerror}") from None
    try:
        spec = parse_spec(text)
        return spec, resolve(spec)
    except QuandleError as exc:
        raise _Invalid(f"{path}: {_describe(exc)}") from None


def _emit(args, obj) -> None:
    sys.stdout.write(dumps(obj, compact=args.json) + "\n")


def _cmd_validate(args) -> int:
    try:
        _, X = _load(args.spec)
    except _Invalid as exc:
        print(exc, file=sys.stderr)
        _emit(args, {"valid": False, "error": str(exc)})
        return EXIT_INVALID
    _emit(args, {"valid": True, "size": X.size})
    return EXIT_OK


def _cmd_info(args) -> int:
    _, X = _load(args.spec)
    try:
        homogeneous = is_homogeneous(X, budget=args.budget)
    except SearchBudgetExceeded as exc:
        print(f"homogeneity undecided: {exc}", file=sys.stderr)
        homogeneous = None
    inn = group_order(X, "inner", cap=args.cap)
    dis = group_order(X, "displacement", cap=args.cap)
    _emit(args, {
        "size": X.size,
        "trivial": is_trivial(X),
        "connected": is_connected(X),
        "homogeneous": homogeneous,
        "inner_order": inn,
        "dis_order": dis,
        "inner_truncated": inn is None,
        "dis_truncated": dis is None,
    })
    return EXIT_OK


def _euler_report(args, spec, X) -> EulerReport:
    if args.fast_graph:
        return euler_graph_fast(resolve_graph_spec(spec), cap=args.cap)
    return euler_with_search(X, cap=args.cap, trials=args.search_trials, seed=args.seed)


def _cmd_euler(args) -> int:
    spec, X = _load(args.spec)
    if args.fast_graph and spec.kind not in GRAPH_TYPES:
        print(f"--fast-graph needs a root of type {', '.join(GRAPH_TYPES)}; got {spec.kind!r}",
              file=sys.stderr)
        return EXIT_USAGE
    report = _euler_report(args, spec, X)
    _emit(args, report.to_json())
    if not report.exact:
        print(f"cap of {args.cap} elements reached; upper bound {report.upper_bound}", file=sys.stderr)
        return EXIT_CAP
    return EXIT_OK


def _cmd_table(args) -> int:
    _, X = _load(args.spec)
    _emit(args, quandle_to_json(X))
    return EXIT_OK


def _cmd_check(args) -> int:
    _, X = _load(args.first)
    _, Y = _load(args.second)
    combined = direct_product(X, Y) if args.law == "product" else free_union(X, Y)
    rx, ry, rz = (euler_with_search(Z, cap=args.cap, trials=args.search_trials, seed=args.seed)
                  for Z in (X, Y, combined))
    out = {"law": args.law, "chi_first": rx.value, "chi_second": ry.value, "chi_combined": rz.value}
    if not (rx.exact and ry.exact and rz.exact):
        out["holds"] = None
        _emit(args, out)
        print("cap reached before all three values were known", file=sys.stderr)
        return EXIT_CAP
    if args.law == "product":
        expected = rx.value * ry.value
        holds = rz.value == expected
        out["relation"] = f"{rz.value} == {rx.value} * {ry.value}"
    else:
        expected = rx.value + ry.value
        holds = rz.value <= expected
        out["relation"] = f"{rz.value} <= {rx.value} + {ry.value}"
    out["holds"] = holds
    _emit(args, out)
    return EXIT_OK if holds else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandle-euler",
        description="Finite quandles, their displacement groups and Euler characteristics.",
    )
    parser.add_argument("--json", action="store_true", help="compact single-line JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    def spec_arg(p, name="spec"):
        p.add_argument(name, help="JSON description file, or - for stdin")

    def cap_arg(p):
        p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                       help=f"max group elements to enumerate (default {DEFAULT_CAP})")

    def search_args(p):
        p.add_argument("--search-trials", type=int, default=0,
                       help="random words to try for a fixed-point-free element past the cap")
        p.add_argument("--seed", type=int, default=0, help="seed for --search-trials")

    p = sub.add_parser("validate", help="check the quandle axioms")
    spec_arg(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("info", help="size, triviality, connectivity, homogeneity, group orders")
    spec_arg(p)
    cap_arg(p)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET,
                   help=f"node budget for the automorphism search (default {DEFAULT_NODE_BUDGET})")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("euler", help="compute the quandle Euler characteristic")
    spec_arg(p)
    cap_arg(p)
    p.add_argument("--fast-graph", action="store_true",
                   help="use the weighted-graph shortcut (graph, cycle and path only)")
    search_args(p)
    p.set_defaults(func=_cmd_euler)

    p = sub.add_parser("table", help="print the Cayley table as JSON")
    spec_arg(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("check", help="check the product or union law on a pair")
    spec_arg(p, "first")
    spec_arg(p, "second")
    p.add_argument("--law", choices=["product", "union"], required=True)
    cap_arg(p)
    search_args(p)
    p.set_defaults(func=_cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("cap", "budget", "search_trials"):
        value = getattr(args, name, None)
        if value is not None and value < (0 if name == "search_trials" else 1):
            parser.error(f"--{name.replace('_', '-')} must be positive")
    try:
        return args.func(args)
    except _Invalid as exc:
        print(exc, file=sys.stderr)
        return EXIT_INVALID
    except QuandleError as exc:
        print(_describe(exc), file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
