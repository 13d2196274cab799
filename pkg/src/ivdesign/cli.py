"""Command-line front end.

Exit codes: 0 ok, 2 non-chordal input, 3 colours exhausted, 4 DP budget
exceeded, 5 infeasible infinite costs, 6 improper colouring, 64 usage error,
65 malformed input file, 66 input file missing.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import bench
from .errors import BudgetExceeded, IvDesignError
from .exact import brute_force_min_cost, exact_min_cost_coloring
from .generate import GeneratorParams, generate_chordal, generator_meta
from .graph import as_weight, dump_graph, load_graph, rational_str
from .greedy import baseline_coloring, greedy_coloring
from .ksparse import (
    frontier_csv,
    frontier_sweep,
    ksparse_lower_bound,
    weighted_ksparse_design,
)
from .separating import coloring_cost, coloring_to_design, design_cost, verify_separating

EX_USAGE = 64
EX_NOINPUT = 66

ALGOS = ("greedy", "greedy-noquant", "baseline", "exact", "brute")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse would exit with 2, which is taken by non-chordal input
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load(path: str):
    if not Path(path).is_file():
        raise FileNotFoundError(path)
    return load_graph(path)


def cmd_generate(args) -> int:
    try:
        params = GeneratorParams(args.n, args.b, args.d, args.pareto_shape, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    g = generate_chordal(params)
    _write(args.out, dump_graph(g, generator_meta(params)))
    return 0


def _solve(g, algo: str, m: int, budget: int | None):
    stats = None
    trace = None
    if algo in ("greedy", "greedy-noquant"):
        coloring, trace = greedy_coloring(g, m, quantize=algo == "greedy")
    elif algo == "baseline":
        coloring = baseline_coloring(g, m)
    elif algo == "exact":
        coloring, _, stats = exact_min_cost_coloring(g, m, budget=budget)
    else:
        coloring, _ = brute_force_min_cost(g, m)
    return coloring, trace, stats


def cmd_solve(args) -> int:
    g, _ = _load(args.graph)
    t0 = time.perf_counter()
    coloring, trace, stats = _solve(g, args.algo, args.m, args.budget)
    wall_ms = (time.perf_counter() - t0) * 1e3
    design = coloring_to_design(coloring, g)
    if not verify_separating(g, design):
        raise IvDesignError("internal error: design does not separate the graph")
    cost = coloring_cost(g, coloring)
    assert cost == design_cost(g, design)
    out = {
        "algo": args.algo,
        "m": design.size,
        "cost": rational_str(cost),
        "interventions": [sorted(s) for s in design.interventions],
        "coloring": coloring.to_json()["colors"],
    }
    if stats is not None:
        out["stats"] = stats.to_json()
    if trace is not None and args.trace:
        Path(args.trace).write_text(json.dumps(trace.to_json(), indent=1) + "\n")
    if args.out:
        Path(args.out).write_text(json.dumps(out) + "\n")
    summary = (
        f"algo={args.algo} m={args.m} cost={rational_str(cost)} "
        f"colors_used={coloring.distinct_colors()} wall_ms={wall_ms:.1f}"
    )
    if stats is not None:
        summary += f" dp_estimate={stats.table_estimate} backend={stats.backend}"
    print(summary)
    return 0


def cmd_ksparse(args) -> int:
    g, _ = _load(args.graph)
    if args.k < 1:
        raise UsageError("--k must be at least 1")
    try:
        lam = as_weight(args.lam)
    except ValueError as exc:
        raise UsageError(f"--lambda: {exc}") from None
    lb = ksparse_lower_bound(g, args.k)
    if args.sweep:
        records = frontier_sweep(g, args.k)
    else:
        records = [weighted_ksparse_design(g, args.k, lam)]
    for r in records:
        if not (verify_separating(g, r.design) and r.design.is_k_sparse(args.k)):
            raise IvDesignError("internal error: design is not a k-sparse separating system")
    if args.sweep:
        _write(args.csv, frontier_csv(records))
        env_sizes = ",".join(str(r.size) for r in records)
        print(f"lower_bound={lb} points={len(records)} sizes={env_sizes}", file=sys.stderr)
    else:
        r = records[0]
        if args.out:
            out = {
                "k": args.k,
                "lambda": rational_str(r.lam),
                "m": r.size,
                "cost": rational_str(r.cost),
                "interventions": [sorted(s) for s in r.design.interventions],
            }
            Path(args.out).write_text(json.dumps(out) + "\n")
        if args.csv:
            Path(args.csv).write_text(frontier_csv(records))
        print(f"lower_bound={lb} size={r.size} cost={rational_str(r.cost)} k={args.k}")
    return 0


def cmd_bench(args) -> int:
    if args.seeds < 1:
        raise UsageError("--seeds must be at least 1")
    table = bench.FIGURES[args.figure](seeds=args.seeds)
    _write(args.out, table.to_csv())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ivdesign", description="Intervention design on chordal graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("generate", help="sample a random chordal graph")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--b", type=int, default=10, help="window size; max degree <= 2b")
    gen.add_argument("--d", type=float, default=1.0, help="expected extra neighbours per vertex")
    gen.add_argument("--pareto-shape", type=float, default=2.0)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", help="output file (default stdout)")
    gen.set_defaults(func=cmd_generate)

    solve = sub.add_parser("solve", help="min-cost design with m interventions")
    solve.add_argument("graph")
    solve.add_argument("--algo", choices=ALGOS, default="greedy")
    solve.add_argument("--m", type=int, default=5)
    solve.add_argument("--out", help="design JSON")
    solve.add_argument("--trace", help="greedy round trace JSON")
    solve.add_argument("--budget", type=int, help="DP table cap (default IVDESIGN_DP_BUDGET or 2e8)")
    solve.set_defaults(func=cmd_solve)

    ks = sub.add_parser("ksparse", help="k-sparse design")
    ks.add_argument("graph")
    ks.add_argument("--k", type=int, required=True)
    mode = ks.add_mutually_exclusive_group()
    mode.add_argument("--lambda", dest="lam", default="inf", help="penalty per vertex (default inf)")
    mode.add_argument("--sweep", action="store_true", help="run the default lambda grid")
    ks.add_argument("--out", help="design JSON (single lambda)")
    ks.add_argument("--csv", help="frontier CSV (default stdout with --sweep)")
    ks.set_defaults(func=cmd_ksparse)

    bn = sub.add_parser("bench", help="reproduce experiment tables as CSV")
    bn.add_argument("--figure", choices=sorted(bench.FIGURES), required=True)
    bn.add_argument("--seeds", type=int, default=5)
    bn.add_argument("--out", help="CSV file (default stdout)")
    bn.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        return _run(parser, argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EX_USAGE


def _run(parser, argv) -> int:
    args = parser.parse_args(argv)
    if getattr(args, "m", 1) < 1:
        parser.error("--m must be at least 1")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except FileNotFoundError as exc:
        print(f"ivdesign: cannot open {exc}", file=sys.stderr)
        return EX_NOINPUT
    except BudgetExceeded as exc:
        print(f"ivdesign: {exc} (estimate={exc.estimate}, cap={exc.cap})", file=sys.stderr)
        return exc.exit_code
    except IvDesignError as exc:
        print(f"ivdesign: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
