"""Command-line entry point.

Subcommands: invariants, decompose, gamma, check, search, generate,
catalog-min-edges.  Graphs are given inline as graph6 tokens, as a file
path, or as ``-`` for standard input; file contents are auto-detected
(leading ``n `` means the edge-list format, anything else is graph6, one
graph per line).  Output is UTF-8 line-delimited JSON records with stable
key order.

Exit codes: 0 on completion (including logged findings), 1 when a theorem
or corollary check is violated, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from typing import Optional

from . import __version__
from .bounds import (CatalogResult, FamilySpec, VIOLATED, catalog_min_edges,
                     generate_family)
from .gamma import gamma_closed, gamma_oracle, gamma_property_suite
from .graphs import (Graph, GraphFormatError, bits, parse_edge_list,
                     parse_graph6, to_graph6)
from .harness import (CHECKS, THEOREM_CHECKS, ScanConfig, enumerate_graphs,
                      normalize_check_name, scan)
from .invariants import core_decomposition, invariant_suite

CLI_CHECK_FLAGS = ("theorem1", "cor1", "berge", "edge-bound",
                   "galvin-goddard", "conj1", "conj3", "hyper-cor")


class UsageError(Exception):
    pass


def _emit(record: dict) -> None:
    record = {"version": __version__, **record}
    print(json.dumps(record, sort_keys=True))


def _read_graphs(arg: str) -> list[Graph]:
    """Inline graph6 token, ``-`` for stdin, or a file path."""
    if arg == "-":
        text = sys.stdin.read()
    elif os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    else:
        return [parse_graph6(arg)]
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("no graphs in input")
    if lines[0].startswith("n ") or lines[0] == "n":
        return [parse_edge_list(text)]
    return [parse_graph6(ln) for ln in lines]


def _cmd_invariants(args) -> int:
    for g in _read_graphs(args.graph):
        rep = invariant_suite(g)
        _emit({"graph6": to_graph6(g), "invariants": dataclasses.asdict(rep)})
    return 0


def _cmd_decompose(args) -> int:
    for g in _read_graphs(args.graph):
        cores = core_decomposition(g)
        _emit({
            "graph6": to_graph6(g),
            "alpha_core": list(bits(cores.alpha_core)),
            "tau_core": list(bits(cores.tau_core)),
            "b_part": list(bits(cores.b_part)),
        })
    return 0


def _cmd_gamma(args) -> int:
    if args.properties:
        a_max, t_max = args.properties
        rep = gamma_property_suite(a_max, t_max)
        _emit({"gamma_properties": dataclasses.asdict(rep),
               "ok": rep.ok, "inequalities_ok": rep.inequalities_ok})
        return 0
    if args.a is None or args.t is None:
        raise UsageError("gamma needs --a and --t (or --properties)")
    gv = gamma_closed(args.a, args.t)
    record = {"gamma": dataclasses.asdict(gv)}
    if args.oracle:
        record["oracle"] = gamma_oracle(args.a, args.t)
    _emit(record)
    return 0


def _cmd_check(args) -> int:
    names = [normalize_check_name(f) for f in CLI_CHECK_FLAGS
             if args.all or getattr(args, f.replace("-", "_"))]
    if not names:
        raise UsageError("select at least one check (or --all)")
    exit_code = 0
    for g in _read_graphs(args.graph):
        g6 = to_graph6(g)
        for name in names:
            v = CHECKS[name](g, None)
            _emit({"graph6": g6, "check": name, "status": v.status,
                   "lhs": v.lhs, "rhs": v.rhs, "slack": v.slack,
                   "equality": v.equality, "witness": v.witness,
                   "finding": (v.status == VIOLATED
                               and name not in THEOREM_CHECKS)})
            if v.status == VIOLATED and name in THEOREM_CHECKS:
                exit_code = 1
    return exit_code


def _cmd_search(args) -> int:
    shards = args.shards
    if shards is None:
        shards = int(os.environ.get("GIWB_SHARDS", "1"))
    config = ScanConfig(
        checks=tuple(args.checks.split(",")),
        n=args.n,
        connected_only=args.connected,
        dedup=args.dedup,
        shard_count=shards,
    )
    report = scan(config)
    _emit({"report": report.body_dict(),
           "runtime": {"elapsed_seconds": report.elapsed_seconds}})
    if args.tsv and report.violations:
        print(report.violations_tsv(), file=sys.stderr)
    return 1 if report.theorem_violations else 0


def _cmd_generate(args) -> int:
    g = generate_family(FamilySpec(kind=args.family, params=tuple(args.params)))
    print(to_graph6(g))
    return 0


def _cmd_catalog(args) -> int:
    if args.input:
        from .harness import graphs_from_file
        stream = graphs_from_file(args.input)
    else:
        n = args.n if args.n is not None else args.alpha + args.tau
        stream = enumerate_graphs(n)
    result: CatalogResult = catalog_min_edges(args.alpha, args.tau, args.c, stream)
    _emit({"catalog": dataclasses.asdict(result)})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="giwb",
        description="Exact graph-invariant workbench and verification harness")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="print the full invariant report")
    p.add_argument("graph", help="graph6 token, file path, or - for stdin")
    p.set_defaults(fn=_cmd_invariants)

    p = sub.add_parser("decompose", help="print the core decomposition")
    p.add_argument("graph")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("gamma", help="evaluate Gamma(a, t) or its property suite")
    p.add_argument("--a", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--oracle", action="store_true",
                   help="also print the composition-DP oracle value")
    p.add_argument("--properties", nargs=2, type=int, metavar=("AMAX", "TMAX"))
    p.set_defaults(fn=_cmd_gamma)

    p = sub.add_parser("check", help="run bound/conjecture checks on graphs")
    p.add_argument("--all", action="store_true")
    for flag in CLI_CHECK_FLAGS:
        p.add_argument(f"--{flag}", action="store_true")
    p.add_argument("graph")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("search", help="exhaustive scan of small graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--dedup", action="store_true")
    p.add_argument("--checks", required=True,
                   help="comma-separated check names")
    p.add_argument("--shards", type=int, default=None,
                   help="shard count (default: GIWB_SHARDS or 1)")
    p.add_argument("--tsv", action="store_true",
                   help="also print a TSV violations table to stderr")
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("generate", help="construct an extremal family graph")
    p.add_argument("--family", required=True,
                   choices=["clique-of-stars", "star", "complete", "odd-cycle"])
    p.add_argument("--params", nargs="+", type=int, required=True)
    p.set_defaults(fn=_cmd_generate)

    p = sub.add_parser("catalog-min-edges",
                       help="minimum edge count for an (alpha, tau, c) class")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--input", help="graph6 file instead of enumeration")
    p.set_defaults(fn=_cmd_catalog)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (GraphFormatError, UsageError, ValueError) as exc:
        print(f"giwb: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
