"""Command-line front end.

Graphs are given either as a family spec (`gp:12,5`, `htg:3,6,3`, ...) or
as a graph6 string; anything containing a colon is parsed as a spec.
Reports go to stdout as JSON (with a schema tag) or as text summaries.
Exit codes: 0 success, 1 verification disagreement, 2 usage error,
3 node budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .census import census_row, classify_table2, generate_bicubic
from .constructions import switching_reachability
from .families import build_from_spec
from .graph6 import decode_graph6, encode_graph6
from .graphs import Graph, girth_signature, is_isomorphic
from .rainbow import enumerate_rdr_colorings, gamma_rk, solve_rdr
from .symmetry import check_krit1, check_krit2
from .verify import (
    verify_basic_families,
    verify_gp,
    verify_htg,
    verify_table2,
    verify_xn,
)

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _load_graph(text: str) -> Graph:
    if ":" in text:
        return build_from_spec(text)
    return decode_graph6(text)


def _default_budget() -> int | None:
    raw = os.environ.get("RDRLAB_BUDGET")
    return int(raw) if raw else None


def _emit(report: dict, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps(report, default=_jsonable))
    else:
        for line in text_lines:
            print(line)


def _jsonable(obj):
    if isinstance(obj, (tuple, set, frozenset)):
        return list(obj)
    raise TypeError(f"not JSON-serializable: {type(obj)}")


def _cmd_gamma(args) -> int:
    g = _load_graph(args.graph)
    result = gamma_rk(g, args.k, budget=args.budget)
    report = {
        "schema": "rdrlab.gamma/1",
        "graph": args.graph,
        "k": args.k,
        "value": result.value,
        "status": result.status,
        "nodes": result.nodes,
        "witness": result.witness.to_json_dict() if result.witness else None,
    }
    _emit(
        report,
        args.format,
        [
            f"gamma_r{args.k}({args.graph}) = {result.value} [{result.status}]",
        ],
    )
    return EXIT_BUDGET if result.status == "undecided" else EXIT_OK


def _cmd_rdr(args) -> int:
    g = _load_graph(args.graph)
    d = g.regular_degree
    if args.d is not None and args.d != d:
        print(
            f"error: graph is {d}-regular, not {args.d}-regular", file=sys.stderr
        )
        return EXIT_USAGE
    decision = solve_rdr(g, budget=args.budget)
    report = {
        "schema": "rdrlab.rdr/1",
        "graph": args.graph,
        "d": d,
        "rdr": decision.status == "rdr",
        "status": decision.status,
        "reason": decision.reason,
        "witness": decision.witness.to_json_dict() if decision.witness else None,
    }
    lines = [f"{args.graph}: {decision.status}" + (f" ({decision.reason})" if decision.reason else "")]
    if args.enumerate and decision.status == "rdr":
        modulo = "colors-aut" if args.modulo == "aut" else "colors"
        classes = enumerate_rdr_colorings(g, modulo)
        report["coloring_classes"] = [w.to_json_dict() for w in classes]
        report["n_classes"] = len(classes)
        lines.append(f"coloring classes modulo {modulo}: {len(classes)}")
    _emit(report, args.format, lines)
    return EXIT_BUDGET if decision.status == "undecided" else EXIT_OK


def _cmd_signature(args) -> int:
    g = _load_graph(args.graph)
    rep = girth_signature(g)
    report = {
        "schema": "rdrlab.signature/1",
        "graph": args.graph,
        "girth": rep.girth,
        "girth_cycles": rep.cycle_count,
        "girth_regular": rep.girth_regular,
        "graph_signature": rep.graph_signature,
        "edge_counts": {f"{u},{v}": c for (u, v), c in sorted(rep.edge_counts.items())},
    }
    _emit(
        report,
        args.format,
        [
            f"{args.graph}: girth {rep.girth}, {rep.cycle_count} girth cycles, "
            f"signature {rep.graph_signature if rep.girth_regular else 'not girth-regular'}"
        ],
    )
    return EXIT_OK


def _cmd_iso(args) -> int:
    g1 = _load_graph(args.first)
    g2 = _load_graph(args.second)
    flag, witness = is_isomorphic(g1, g2)
    report = {
        "schema": "rdrlab.iso/1",
        "first": args.first,
        "second": args.second,
        "isomorphic": flag,
        "witness": list(witness) if witness else None,
    }
    _emit(report, args.format, [f"{args.first} ~ {args.second}: {flag}"])
    return EXIT_OK


def _cmd_criteria(args) -> int:
    g = _load_graph(args.graph)
    checks = {"1": check_krit1, "2": check_krit2} if args.krit is None else {
        args.krit: {"1": check_krit1, "2": check_krit2}[args.krit]
    }
    results = {}
    lines = []
    for name, fn in checks.items():
        try:
            witness = fn(g)
        except ValueError as exc:
            results[name] = {"status": "precondition-failed", "reason": str(exc)}
            lines.append(f"criterion {name}: precondition failed ({exc})")
            continue
        if witness is None:
            results[name] = {"status": "no-witness"}
            lines.append(f"criterion {name}: no witness")
        else:
            results[name] = {"status": "witness", "witness": witness.to_json_dict()}
            lines.append(f"criterion {name}: witness found")
    report = {"schema": "rdrlab.criteria/1", "graph": args.graph, "results": results}
    _emit(report, args.format, lines)
    return EXIT_OK


def _cmd_census(args) -> int:
    if args.emit_g6:
        for g in generate_bicubic(args.order):
            print(encode_graph6(g))
        return EXIT_OK
    row = census_row(args.order, workers=args.workers, budget=args.budget)
    report = dict(schema="rdrlab.census/1", **row.to_json_dict())
    _emit(
        report,
        args.format,
        [
            f"order {row.order}: bc={row.bc} rdr3={row.rdr3} vt={row.vt} "
            f"vt_rdr3={row.vt_rdr3} undecided={row.undecided}"
        ],
    )
    return EXIT_BUDGET if row.undecided else EXIT_OK


def _cmd_switch_explore(args) -> int:
    graphs = []
    with open(args.g6_file, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                graphs.append(decode_graph6(line))
    rep = switching_reachability(graphs)
    report = dict(schema="rdrlab.switch/1", **rep.to_json_dict())
    _emit(
        report,
        args.format,
        [
            f"classes: {len(rep.nodes)}, edges: {len(rep.edges)}, "
            f"connected: {rep.connected}, components: {rep.component_sizes}"
        ],
    )
    return EXIT_OK


def _cmd_verify(args) -> int:
    runners = {
        "basic": lambda: verify_basic_families(args.max or 42),
        "gp": lambda: verify_gp(args.max or 36, workers=args.workers),
        "htg": lambda: verify_htg(args.max or 48, workers=args.workers),
        "xn": lambda: verify_xn(args.max or 6),
        "table2": lambda: verify_table2(args.max or 36),
    }
    rep = runners[args.target]()
    report = dict(schema="rdrlab.verify/1", **rep.to_json_dict())
    lines = [
        f"{rep.theorem}: {rep.agree}/{rep.total} agree, "
        f"{len(rep.disagreements)} disagreements ({rep.elapsed_s:.1f}s)"
    ]
    for d in rep.disagreements:
        lines.append(f"  disagrees: {d}")
    _emit(report, args.format, lines)
    return EXIT_DISAGREEMENT if rep.disagreements else EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rdrlab",
        description="rainbow domination regularity: solvers, criteria, census",
    )
    parser.add_argument(
        "--format", choices=("json", "text"), default="json",
        help="report format (default json)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", help="exact k-rainbow domination number")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=_default_budget())
    p.set_defaults(fn=_cmd_gamma)

    p = sub.add_parser("rdr", help="decide d-rainbow domination regularity")
    p.add_argument("graph")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--modulo", choices=("colors", "aut"), default="colors")
    p.add_argument("--budget", type=int, default=_default_budget())
    p.set_defaults(fn=_cmd_rdr)

    p = sub.add_parser("signature", help="girth cycles and signature")
    p.add_argument("graph")
    p.set_defaults(fn=_cmd_signature)

    p = sub.add_parser("iso", help="isomorphism test")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(fn=_cmd_iso)

    p = sub.add_parser("criteria", help="group-theoretic RDR criteria")
    p.add_argument("graph")
    p.add_argument("--krit", choices=("1", "2"), default=None)
    p.set_defaults(fn=_cmd_criteria)

    p = sub.add_parser("census", help="bicubic census at one order")
    p.add_argument("order", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--row", action="store_true", default=True)
    group.add_argument("--emit-g6", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=_default_budget())
    p.set_defaults(fn=_cmd_census)

    p = sub.add_parser("switch-explore", help="switching meta-graph of g6 file")
    p.add_argument("g6_file")
    p.set_defaults(fn=_cmd_switch_explore)

    p = sub.add_parser("verify", help="run a verification scan")
    p.add_argument("target", choices=("basic", "gp", "htg", "xn", "table2"))
    p.add_argument("--max", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(fn=_cmd_verify)
    return parser


def run_command(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
