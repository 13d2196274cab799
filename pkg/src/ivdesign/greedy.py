"""Quantized greedy weighted colouring for minimum-cost intervention design.

Each round extracts a maximum weight independent set from what is still
uncoloured and gives it the next cheapest colour vector.  The first set is
the MWIS of the whole graph and gets the all-zero colour.  With quantization
the remaining weights are rescaled to integers in ``[0, n^3]`` first, which
bounds the number of rounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice
from typing import NamedTuple

from .chordal import (
    frank_mwis,
    infinite_vertices_independent,
    max_weight_independent_set,
    optimal_coloring,
    perfect_elimination_ordering,
    tiebreak_keys,
)
from .errors import ColorsExhausted, InfeasibleInfiniteCosts
from .graph import WeightedGraph, induced_subgraph, integer_weights, rational_str
from .separating import (
    Coloring,
    InterventionDesign,
    canonical_colors,
    color_string,
    coloring_to_design,
    popcount,
)


def guarantee_min_m(chi: int, n: int) -> int:
    """Smallest ``m`` with ``m >= ceil(log2 chi) + ceil(log2 log2 n) + 5``."""
    log_chi = 0 if chi <= 1 else (chi - 1).bit_length()
    if n <= 2:
        loglog = 0
    else:
        loglog = max(0, math.ceil(math.log2(math.log2(n)) - 1e-12))
    return log_chi + loglog + 5


def termination_bound(chi: int, n: int) -> float:
    """Rounds needed by the quantized greedy in the worst case: ``chi(2 + 5 ln n) + 1``."""
    return chi * (2 + 5 * math.log(max(n, 1))) + 1


class Quantization(NamedTuple):
    graph: WeightedGraph
    s0: frozenset
    scale: Fraction | None


def _require_finite_cover(g: WeightedGraph) -> None:
    if not infinite_vertices_independent(g):
        raise InfeasibleInfiniteCosts(
            "two adjacent vertices have infinite cost; no separating system has finite cost"
        )


def quantize_weights(g: WeightedGraph, peo=None) -> Quantization:
    """Remove the MWIS ``S0``, then map ``w -> floor(w n^3 / w_max)`` on the rest.

    ``S0`` members keep their original weight; they always take the zero colour
    so their weight never enters the quantized cost.  ``scale`` is
    ``mu = w_max / n^3`` (``None`` when nothing is left after ``S0``).
    """
    if peo is None:
        peo = perfect_elimination_ordering(g)
    _require_finite_cover(g)
    s0 = max_weight_independent_set(g, peo)
    rest = [v for v in range(g.n) if v not in s0]
    if not rest:
        return Quantization(g, s0, None)
    n3 = g.n**3
    w_max = max(Fraction(g.weights[v]) for v in rest)
    weights = list(g.weights)
    for v in rest:
        weights[v] = Fraction(0) if w_max == 0 else Fraction(math.floor(weights[v] * n3 / w_max))
    return Quantization(g.with_weights(weights), s0, w_max / n3)


@dataclass
class GreedyRound:
    vertices: tuple[int, ...]
    color: int
    # weight of the set under the weights used to select it
    weight: Fraction | float
    phase: str


@dataclass
class GreedyTrace:
    m: int
    quantized: bool
    quantization_scale: Fraction | None = None
    rounds: list[GreedyRound] = field(default_factory=list)

    @property
    def colors_used(self) -> int:
        return len(self.rounds)

    def to_json(self) -> list[dict]:
        return [
            {
                "round": t,
                "phase": r.phase,
                "color": color_string(r.color, self.m),
                "weight": rational_str(r.weight),
                "vertices": list(r.vertices),
            }
            for t, r in enumerate(self.rounds)
        ]


def greedy_coloring(g: WeightedGraph, m: int, quantize: bool = True) -> tuple[Coloring, GreedyTrace]:
    if m < 1:
        raise ValueError("m must be at least 1")
    n = g.n
    peo = perfect_elimination_ordering(g)
    _require_finite_cover(g)
    if quantize:
        q = quantize_weights(g, peo)
        s0, scale = q.s0, q.scale
        sel_weights = q.graph.weights
    else:
        s0, scale = max_weight_independent_set(g, peo), None
        sel_weights = g.weights
    ints, denom = integer_weights(sel_weights)
    trace = GreedyTrace(m, quantize, scale)
    palette = canonical_colors(m)
    colors = [0] * n
    trace.rounds.append(GreedyRound(tuple(sorted(s0)), next(palette), g.set_weight(s0), "mwis"))
    residual = [v for v in peo if v not in s0]
    available = 1 << m
    rounds = 1
    while residual:
        # primary: selection weight; secondary: cardinality (drives the cover phase)
        primary = {v: ints[v] * (n + 1) + 1 for v in residual}
        chosen = frank_mwis(residual, g.adj, tiebreak_keys(primary, n, residual))
        rounds += 1
        if rounds <= available:
            c = next(palette)
            for v in chosen:
                colors[v] = c
            phase = "cover" if all(ints[v] == 0 for v in residual) else "weighted"
            trace.rounds.append(
                GreedyRound(tuple(sorted(chosen)), c, Fraction(sum(ints[v] for v in chosen), denom), phase)
            )
        residual = [v for v in residual if v not in chosen]
    if rounds > available:
        raise ColorsExhausted(
            f"greedy needs {rounds} colours but m={m} provides only {available}",
            needed=rounds,
            available=available,
        )
    return Coloring(m, tuple(colors)), trace


def greedy_min_cost_design(
    g: WeightedGraph, m: int, quantize: bool = True
) -> tuple[InterventionDesign, GreedyTrace]:
    """Greedy colouring converted to an intervention design.

    Raises :class:`ColorsExhausted` when more than ``2**m`` rounds are needed.
    """
    coloring, trace = greedy_coloring(g, m, quantize)
    return coloring_to_design(coloring, g), trace


def baseline_coloring(g: WeightedGraph, m: int) -> Coloring:
    if m < 1:
        raise ValueError("m must be at least 1")
    peo = perfect_elimination_ordering(g)
    _require_finite_cover(g)
    s0 = max_weight_independent_set(g, peo)
    rest = [v for v in range(g.n) if v not in s0]
    sub = induced_subgraph(g, rest)
    sub_colors = optimal_coloring(sub)
    k = max(sub_colors, default=-1) + 1
    classes = [[] for _ in range(k)]
    for i, c in enumerate(sub_colors):
        classes[c].append(sub.labels[i])
    classes.sort(key=lambda cls: (-g.set_weight(cls), cls))
    if k + 1 > 1 << m:
        raise ColorsExhausted(
            f"baseline needs {k + 1} colours but m={m} provides only {1 << m}",
            needed=k + 1,
            available=1 << m,
        )
    colors = [0] * g.n
    for cls, c in zip(classes, islice(canonical_colors(m), 1, None)):
        for v in cls:
            colors[v] = c
    return Coloring(m, tuple(colors))


def baseline_design(g: WeightedGraph, m: int) -> InterventionDesign:
    """MWIS gets the zero colour; an optimal colouring of the rest is ranked by
    class weight and the heaviest classes get the cheapest colours."""
    return coloring_to_design(baseline_coloring(g, m), g)


def max_color_weight(coloring: Coloring) -> int:
    return max((popcount(c) for c in coloring.colors), default=0)


__all__ = [
    "GreedyRound",
    "GreedyTrace",
    "Quantization",
    "baseline_coloring",
    "baseline_design",
    "greedy_coloring",
    "greedy_min_cost_design",
    "max_color_weight",
    "quantize_weights",
    "termination_bound",
    "guarantee_min_m",
]
