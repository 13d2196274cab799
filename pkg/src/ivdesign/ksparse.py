"""k-sparse intervention design: every intervention touches at most k vertices.

Both algorithms pick a vertex cover ``S``, colour the induced graph ``G[S]``
optimally and cut each colour class into chunks of at most ``k`` vertices.
Vertices outside ``S`` form an independent set and are never intervened on.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .chordal import (
    color_classes,
    infinite_vertices_independent,
    max_weight_independent_set,
    optimal_coloring,
    perfect_elimination_ordering,
)
from .errors import InfeasibleInfiniteCosts
from .graph import INF, Weight, WeightedGraph, as_weight, induced_subgraph, is_inf, rational_str
from .separating import InterventionDesign, design_cost


def min_vertex_cover_size(g: WeightedGraph, peo=None) -> int:
    return g.n - len(max_weight_independent_set(g.unit_weights(), peo))


def ksparse_lower_bound(g: WeightedGraph, k: int) -> int:
    """``ceil(tau / k)``: each intervention cuts edges of at most k cover vertices."""
    if k < 1:
        raise ValueError("k must be at least 1")
    tau = min_vertex_cover_size(g, perfect_elimination_ordering(g))
    return -(-tau // k)


def chunk_design(g: WeightedGraph, cover: Iterable[int], k: int) -> InterventionDesign:
    """Optimally colour ``G[cover]`` and split every colour class into k-chunks."""
    sub = induced_subgraph(g, cover)
    colors = optimal_coloring(sub)
    sets = []
    for cls in color_classes(colors):
        members = sorted(sub.labels[i] for i in cls)
        for start in range(0, len(members), k):
            sets.append(members[start : start + k])
    return InterventionDesign.of(sets)


def min_size_ksparse_design(g: WeightedGraph, k: int) -> InterventionDesign:
    """Chunked colouring of a minimum-cardinality vertex cover."""
    if k < 1:
        raise ValueError("k must be at least 1")
    peo = perfect_elimination_ordering(g)
    indep = max_weight_independent_set(g.unit_weights(), peo)
    return chunk_design(g, (v for v in range(g.n) if v not in indep), k)


def infinity_proxy(g: WeightedGraph) -> Fraction:
    """A penalty large enough that covers compare by cardinality first."""
    return 1 + sum((Fraction(w) for w in g.weights if not is_inf(w)), Fraction(0))


@dataclass(frozen=True)
class KSparseResult:
    lam: Weight
    design: InterventionDesign
    size: int
    cost: Weight


def weighted_ksparse_design(g: WeightedGraph, k: int, lam) -> KSparseResult:
    """Chunked colouring of the min-weight cover under ``w_v + lam``.

    ``lam`` may be ``inf`` (or ``"inf"``), meaning the cardinality-first proxy
    :func:`infinity_proxy`.  Large ``lam`` favours few interventions, small
    ``lam`` favours cheap ones.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    lam = as_weight(lam)
    peo = perfect_elimination_ordering(g)
    if not infinite_vertices_independent(g):
        raise InfeasibleInfiniteCosts(
            "two adjacent vertices have infinite cost; every cover contains one of them"
        )
    penalty = infinity_proxy(g) if is_inf(lam) else lam
    shifted = g.with_weights([w if is_inf(w) else w + penalty for w in g.weights])
    indep = max_weight_independent_set(shifted, peo)
    design = chunk_design(g, (v for v in range(g.n) if v not in indep), k)
    return KSparseResult(lam, design, design.size, design_cost(g, design))


def default_lambda_grid(g: WeightedGraph, points: int = 16) -> list[Weight]:
    """Zero, a geometric ladder around the median weight, weight quantiles, and inf."""
    finite = sorted(Fraction(w) for w in g.weights if not is_inf(w))
    grid = {Fraction(0)}
    if finite:
        med = finite[len(finite) // 2] or Fraction(1)
        for i in range(points - 1):
            grid.add(med * Fraction(2) ** (i - (points // 2)))
        for q in (0.1, 0.25, 0.5, 0.75, 0.9, 0.99):
            grid.add(finite[min(len(finite) - 1, int(q * len(finite)))])
    return sorted(grid) + [INF]


def frontier_sweep(g: WeightedGraph, k: int, lambdas: Sequence | None = None) -> list[KSparseResult]:
    """Run the weighted algorithm for every ``lam``; records sorted by (size, cost, lam)."""
    if lambdas is None:
        lambdas = default_lambda_grid(g)
    if len(lambdas) == 0:
        raise ValueError("lambda grid is empty")
    out = [weighted_ksparse_design(g, k, lam) for lam in lambdas]
    out.sort(key=lambda r: (r.size, r.cost, r.lam))
    return out


def lower_envelope(records: Sequence[KSparseResult]) -> list[KSparseResult]:
    """Pareto-optimal records: cost strictly drops each time size grows."""
    env = []
    for r in sorted(records, key=lambda r: (r.size, r.cost)):
        if not env or r.cost < env[-1].cost:
            if env and env[-1].size == r.size:
                continue
            env.append(r)
    return env


def frontier_csv(records: Sequence[KSparseResult]) -> str:
    top = max((r.cost for r in records), default=0)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["lambda", "size", "cost", "normalized_cost"])
    for r in records:
        norm = r.cost / top if top and not is_inf(top) else 0
        w.writerow([rational_str(r.lam), r.size, f"{float(r.cost):.6f}", f"{float(norm):.6f}"])
    return buf.getvalue()


def size_ratio_bound(g: WeightedGraph, k: int) -> float:
    """Size guarantee factor ``1 + k (Delta+1) Delta / n`` relative to the optimum."""
    if g.n == 0:
        return 1.0
    delta = g.max_degree
    return 1 + k * (delta + 1) * delta / g.n


def size_upper_bound(g: WeightedGraph, k: int) -> int:
    """``ceil(tau/k) + Delta + 1``."""
    return ksparse_lower_bound(g, k) + g.max_degree + 1


__all__ = [
    "KSparseResult",
    "chunk_design",
    "default_lambda_grid",
    "frontier_csv",
    "frontier_sweep",
    "infinity_proxy",
    "ksparse_lower_bound",
    "lower_envelope",
    "min_size_ksparse_design",
    "min_vertex_cover_size",
    "size_upper_bound",
    "size_ratio_bound",
    "weighted_ksparse_design",
]
