"""Benchmark drivers producing plot-ready CSV (series, x, y, ey, status).

``y`` is the mean over seeds and ``ey`` the sample standard deviation
(0 for a single seed).  Lines starting with ``#`` describe the setup.
"""

from __future__ import annotations

import io
import statistics
import time
from dataclasses import dataclass, field

from .errors import BudgetExceeded, ColorsExhausted
from .exact import dp_budget_from_env, exact_min_cost_coloring
from .generate import (
    DEGREE_TABLE_B10,
    DEGREE_TABLE_B10_N10K,
    GeneratorParams,
    d_for_mean_degree,
    generate_chordal,
    mean_degree,
)
from .greedy import baseline_coloring, greedy_coloring
from .ksparse import default_lambda_grid, ksparse_lower_bound, weighted_ksparse_design
from .separating import coloring_cost, coloring_to_design, verify_separating

COST_NS = (100, 200, 300, 400, 500, 600, 700, 800, 900, 1000)
COST_DEGREES = (3, 4, 6, 8, 10, 12, 14)
COST_SERIES = ("baseline", "greedy", "greedy-noquant", "optimal")


@dataclass
class BenchTable:
    header: list[str] = field(default_factory=list)
    rows: list[tuple] = field(default_factory=list)

    def add(self, series: str, x, values: list[float], failures: dict[str, int]) -> None:
        if failures:
            status = ";".join(f"{k}={v}" for k, v in sorted(failures.items()))
        else:
            status = "ok"
        if values:
            y = statistics.fmean(values)
            ey = statistics.stdev(values) if len(values) > 1 else 0.0
            self.rows.append((series, x, y, ey, status))
        else:
            self.rows.append((series, x, float("nan"), float("nan"), status))

    def series(self, name: str) -> list[tuple]:
        return [r for r in self.rows if r[0] == name]

    def to_csv(self) -> str:
        buf = io.StringIO()
        for line in self.header:
            buf.write(f"# {line}\n")
        buf.write("series,x,y,ey,status\n")
        for s, x, y, ey, status in self.rows:
            xs = f"{x:.4f}" if isinstance(x, float) else str(x)
            buf.write(f"{s},{xs},{y:.6f},{ey:.6f},{status}\n")
        return buf.getvalue()


def _solve_series(g, m: int, budget: int) -> dict[str, float | str]:
    out: dict[str, float | str] = {}
    for name in COST_SERIES:
        try:
            if name == "baseline":
                col = baseline_coloring(g, m)
            elif name == "optimal":
                col = exact_min_cost_coloring(g, m, budget=budget).coloring
            else:
                col, _ = greedy_coloring(g, m, quantize=name == "greedy")
        except BudgetExceeded:
            out[name] = "budget"
            continue
        except ColorsExhausted:
            out[name] = "colors_exhausted"
            continue
        assert verify_separating(g, coloring_to_design(col, g))
        out[name] = float(coloring_cost(g, col))
    return out


def _cost_table(points, seeds: int, m: int, budget: int, header: list[str]) -> BenchTable:
    table = BenchTable(header)
    for x, make in points:
        per_series: dict[str, list[float]] = {s: [] for s in COST_SERIES}
        fails: dict[str, dict[str, int]] = {s: {} for s in COST_SERIES}
        xs = []
        for seed in range(seeds):
            g = make(seed)
            xs.append(mean_degree(g))
            for name, val in _solve_series(g, m, budget).items():
                if isinstance(val, str):
                    fails[name][val] = fails[name].get(val, 0) + 1
                else:
                    per_series[name].append(val)
        if x is None:
            x = statistics.fmean(xs)
        for name in COST_SERIES:
            table.add(name, x, per_series[name], fails[name])
    return table


def cost_vs_vertices(seeds: int = 10, ns=COST_NS, m: int = 5, b: int = 10, budget: int | None = None) -> BenchTable:
    budget = dp_budget_from_env() if budget is None else budget
    d = d_for_mean_degree(10.0, DEGREE_TABLE_B10)
    header = [
        f"cost vs number of vertices; m={m}, b={b}, d={d:.4f} (mean degree ~10), pareto shape 2.0",
        f"optimal: exact clique-tree DP, only where the table estimate is <= {budget} labellings; other points have status budget=<count>",
        "y: mean cost over seeds, ey: sample standard deviation",
    ]
    points = [(n, lambda s, n=n: generate_chordal(GeneratorParams(n, b, d, 2.0, s))) for n in ns]
    return _cost_table(points, seeds, m, budget, header)


def cost_vs_degree(
    seeds: int = 10, degrees=COST_DEGREES, n: int = 500, m: int = 5, b: int = 10, budget: int | None = None
) -> BenchTable:
    budget = dp_budget_from_env() if budget is None else budget
    header = [
        f"cost vs mean degree; n={n}, m={m}, b={b}, pareto shape 2.0",
        "x: measured mean degree (d chosen from the b=10 calibration table)",
        f"optimal: exact clique-tree DP, only where the table estimate is <= {budget} labellings; other points have status budget=<count>",
        "y: mean cost over seeds, ey: sample standard deviation",
    ]
    points = []
    for target in degrees:
        d = min(d_for_mean_degree(target, DEGREE_TABLE_B10), float(b))
        points.append((None, lambda s, d=d: generate_chordal(GeneratorParams(n, b, d, 2.0, s))))
    return _cost_table(points, seeds, m, budget, header)


def sparse_regime_params(seed: int, n: int = 10000, b: int = 10) -> GeneratorParams:
    return GeneratorParams(n, b, d_for_mean_degree(3.0, DEGREE_TABLE_B10_N10K), 2.0, seed)


def ksparse_frontier(seeds: int = 20, n: int = 10000, k: int = 10) -> BenchTable:
    """Frontier averaged per lambda; the grid is built from the seed-0 graph and shared."""
    graphs = [generate_chordal(sparse_regime_params(s, n)) for s in range(seeds)]
    grid = default_lambda_grid(graphs[0])
    header = [
        f"k-sparse size vs normalized cost; n={n}, k={k}, b=10, mean degree ~3, pareto shape 2.0",
        "series frontier: one row per lambda; x = mean size, y = mean cost normalized by the largest cost of that seed's sweep",
        "series lower_bound: x = mean ceil(tau/k), y = 0",
    ]
    sizes = {i: [] for i in range(len(grid))}
    norms = {i: [] for i in range(len(grid))}
    lbs = []
    for g in graphs:
        recs = [weighted_ksparse_design(g, k, lam) for lam in grid]
        top = max(r.cost for r in recs)
        for i, r in enumerate(recs):
            sizes[i].append(r.size)
            norms[i].append(float(r.cost / top))
        lbs.append(ksparse_lower_bound(g, k))
    table = BenchTable(header)
    for i, lam in enumerate(grid):
        table.add("frontier", statistics.fmean(sizes[i]), norms[i], {})
        table.rows[-1] = table.rows[-1][:4] + (f"lambda={float(lam):g}",)
    table.add("lower_bound", statistics.fmean(lbs), [0.0] * len(lbs), {})
    return table


def runtime(seeds: int = 3, n: int = 10000, m: int = 5, b: int = 10) -> BenchTable:
    d = d_for_mean_degree(10.0, DEGREE_TABLE_B10)
    header = [
        f"runtime: quantized greedy wall seconds; n={n}, m={m}, b={b} (max degree <= {2 * b}), d={d:.4f}",
    ]
    table = BenchTable(header)
    times = []
    for seed in range(seeds):
        g = generate_chordal(GeneratorParams(n, b, d, 2.0, seed))
        t0 = time.perf_counter()
        col, _ = greedy_coloring(g, m)
        times.append(time.perf_counter() - t0)
        assert verify_separating(g, coloring_to_design(col, g))
    table.add("greedy", n, times, {})
    return table


FIGURES = {"2a": cost_vs_vertices, "2b": cost_vs_degree, "3": ksparse_frontier, "runtime": runtime}
