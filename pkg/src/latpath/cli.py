"""Command-line front end.

Exit codes: 0 success, 1 usage or validation error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .count import (
    CountReport,
    count_complex,
    count_real,
    count_welschinger,
    invariance_sweep,
)
from .errors import LatpathError, SignLengthMismatch
from .geometry import (
    DirectionOrder,
    LatticePolygon,
    X_MINUS_EPS_Y,
    boundary_chains,
    make_polygon,
    standard_orders,
)
from .real import parse_sign_pair, parse_signs
from .registry import load_registry, verify_registry
from .render import RenderSpec, render


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _pts(seq) -> str:
    return " ".join(f"({p[0]},{p[1]})" for p in seq)


def load_polygon(args) -> LatticePolygon:
    if args.polygon and args.vertices:
        raise UsageError("give either --polygon or --vertices, not both")
    if args.polygon:
        try:
            data = json.loads(Path(args.polygon).read_text("utf-8"))
        except OSError as exc:
            raise UsageError(f"cannot read polygon file: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise UsageError(f"polygon file is not valid JSON: {exc}") from exc
        if not isinstance(data, dict) or "vertices" not in data:
            raise UsageError('polygon file must look like {"vertices": [[x, y], ...]}')
        return make_polygon(data["vertices"])
    if args.vertices:
        try:
            pts = [tuple(int(c) for c in tok.split(",")) for tok in args.vertices.split()]
        except ValueError:
            raise UsageError("--vertices expects 'x,y x,y ...'") from None
        if any(len(p) != 2 for p in pts):
            raise UsageError("--vertices expects 'x,y x,y ...'")
        return make_polygon(pts)
    raise UsageError("a polygon is required: use --polygon FILE or --vertices 'x,y x,y ...'")


def load_order(args) -> DirectionOrder:
    return DirectionOrder.parse(args.order) if args.order else X_MINUS_EPS_Y


def load_signs(args, n: int):
    if args.signs and args.signs_all:
        raise UsageError("give either --signs or --signs-all, not both")
    if args.signs_all:
        return (parse_sign_pair(args.signs_all),) * n
    if args.signs:
        signs = parse_signs(args.signs)
        if len(signs) != n:
            raise SignLengthMismatch(f"expected {n} sign pairs (m - delta), got {len(signs)}")
        return signs
    return None


def _emit(args, data: dict, table: str) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print(table)


def _report(args, kind: str) -> CountReport:
    poly = load_polygon(args)
    order = load_order(args)
    if kind == "complex":
        return count_complex(poly, order, args.delta, args.workers)
    if kind == "welschinger":
        return count_welschinger(poly, order, args.delta, args.workers)
    n = poly.m - args.delta
    signs = load_signs(args, n) if n >= 1 else None
    if signs is None:
        if kind == "real" and n >= 1:
            raise UsageError("count-real needs --signs or --signs-all")
        return count_welschinger(poly, order, args.delta, args.workers)
    return count_real(poly, order, args.delta, signs, args.workers)


def cmd_info(args) -> int:
    poly = load_polygon(args)
    order = load_order(args)
    ch = boundary_chains(poly, order)
    data = {
        "vertices": poly.to_json()["vertices"],
        "m": poly.m,
        "l": poly.l,
        "B": poly.boundary_count,
        "double_area": poly.double_area,
        "lambda": str(order),
        "p": list(ch.p),
        "q": list(ch.q),
        "alpha_plus": [list(p) for p in ch.alpha_plus],
        "alpha_minus": [list(p) for p in ch.alpha_minus],
        "n_plus": ch.n_plus,
        "n_minus": ch.n_minus,
    }
    table = "\n".join(
        [
            f"vertices   {_pts(poly.vertices)}",
            f"m          {poly.m}",
            f"l          {poly.l}",
            f"B          {poly.boundary_count}",
            f"2*area     {poly.double_area}",
            f"lambda     {order}",
            f"p, q       {_pts([ch.p])}, {_pts([ch.q])}",
            f"alpha+     {_pts(ch.alpha_plus)}  (n+ = {ch.n_plus})",
            f"alpha-     {_pts(ch.alpha_minus)}  (n- = {ch.n_minus})",
        ]
    )
    _emit(args, data, table)
    return 0


def cmd_count(args, kind: str) -> int:
    report = _report(args, kind)
    _emit(args, report.to_json(), str(report.total))
    return 0


def cmd_paths(args) -> int:
    report = _report(args, "paths")
    shown = [
        (i, e)
        for i, e in enumerate(report.entries)
        if args.all or e.complex.mu or (e.real is not None and e.real.nu)
    ]
    lines = []
    for i, e in shown:
        c, r = e.complex, e.real
        cols = [f"{i:>4}", f"mu+={c.mu_plus}", f"mu-={c.mu_minus}", f"mu={c.mu}"]
        if r is not None and r.mu_r is not None:
            cols.append(f"muR={r.mu_r}")
        if r is not None:
            cols.append(f"nu={r.nu}")
        cols.append(_pts(e.path))
        lines.append("  ".join(cols))
    lines.append(f"paths enumerated: {report.enumerated}, total mu: {sum(e.complex.mu for e in report.entries)}")
    data = report.to_json()
    data["paths"] = [e.to_json() for _, e in shown]
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_sweep(args) -> int:
    poly = load_polygon(args)
    orders = [DirectionOrder.parse(s) for s in args.orders] if args.orders else standard_orders()
    result = invariance_sweep(poly, args.delta, orders, args.workers)
    table = "\n".join(f"{k:>12}  {v}" for k, v in result.totals.items())
    table += "\n" + ("invariant" if result.passed else "MISMATCH")
    _emit(args, {"delta": args.delta, "totals": result.totals, "passed": result.passed}, table)
    return 0 if result.passed else 2


def cmd_verify(args) -> int:
    results = verify_registry(load_registry(args.registry))
    lines = []
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        got = r.error if r.error else r.actual
        lines.append(f"{status}  {r.case.describe()}  expected={r.case.expected} got={got}")
    failed = sum(not r.ok for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} cases passed")
    data = {
        "cases": [
            {"case": r.case.describe(), "expected": r.case.expected, "actual": r.actual, "ok": r.ok, "error": r.error}
            for r in results
        ],
        "failed": failed,
    }
    _emit(args, data, "\n".join(lines))
    return 2 if failed else 0


def cmd_render(args) -> int:
    if args.select in ("all", "nonzero"):
        select = args.select
    else:
        try:
            select = tuple(int(s) for s in args.select.split(","))
        except ValueError:
            raise UsageError("--select takes 'all', 'nonzero' or comma-separated indices") from None
    report = _report(args, args.kind)
    if isinstance(select, tuple) and any(not 0 <= i < len(report.entries) for i in select):
        raise UsageError(f"path indices must lie in [0, {len(report.entries) - 1}]")
    spec = RenderSpec(select=select, fmt=args.style, cell=args.cell, annotate=not args.no_annotate)
    doc = render(report, spec)
    if args.output:
        Path(args.output).write_text(doc, encoding="utf-8")
    else:
        sys.stdout.write(doc)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="latpath", description="Count curves on toric surfaces via lattice paths.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, delta=True, order=True, signs=False):
        p.add_argument("--polygon", help='JSON file {"vertices": [[x, y], ...]}')
        p.add_argument("--vertices", help="inline vertices, e.g. '0,0 3,0 0,3'")
        if order:
            p.add_argument("--lambda", dest="order", help="order 'a1,a2;t1,t2' (default 1,0;0,-1, i.e. x - eps*y)")
        if delta:
            p.add_argument("--delta", type=int, required=True)
        if signs:
            p.add_argument("--signs", help="sign pairs per edge, e.g. '++ +- -+'")
            p.add_argument("--signs-all", help="one sign pair repeated on every edge, e.g. '++'")
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--workers", type=int, default=None, help="worker processes (default $LATPATH_THREADS or 1)")

    p = sub.add_parser("info", help="polygon counts, extremal vertices and boundary chains")
    common(p, delta=False)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("paths", help="enumerate paths with their multiplicities")
    common(p, signs=True)
    p.add_argument("--all", action="store_true", help="include paths of multiplicity zero")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("count", help="the complex count N^{Delta,delta}")
    common(p)
    p.set_defaults(func=lambda a: cmd_count(a, "complex"))

    p = sub.add_parser("count-real", help="real count for a quadrant sign sequence")
    common(p, signs=True)
    p.set_defaults(func=lambda a: cmd_count(a, "real"))

    p = sub.add_parser("count-welschinger", help="signed real count")
    common(p)
    p.set_defaults(func=lambda a: cmd_count(a, "welschinger"))

    p = sub.add_parser("sweep", help="check that the count is the same for several orders")
    common(p, order=False)
    p.add_argument("--lambda", dest="orders", action="append", help="repeatable; default: the 8 orders ±x±εy, ±y±εx")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="check a registry of known values")
    p.add_argument("--registry", help="registry JSON (default: the shipped registry)")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw the paths as SVG or ASCII panels")
    common(p, signs=True)
    p.add_argument("--kind", choices=("complex", "real", "welschinger"), default="complex")
    p.add_argument("--select", default="nonzero", help="'all', 'nonzero' or indices '0,3,5'")
    p.add_argument("--style", choices=("svg", "ascii"), default="svg")
    p.add_argument("--cell", type=int, default=24)
    p.add_argument("--no-annotate", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, LatpathError, ValueError) as exc:
        print(f"latpath {args.command}: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"latpath {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
