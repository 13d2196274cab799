"""Random connected chordal graphs with bounded degree, and Pareto vertex costs.

Vertices arrive in order ``0..n-1``.  Vertex ``i`` links to one uniform pick
from the window of the ``b`` previous vertices and to each window vertex
independently with probability ``d/b``.  Afterwards the graph is made chordal
by sweeping ``i = n-1 .. 1`` and turning the earlier neighbours of ``i`` into
a clique, so the identity order reversed is a perfect elimination ordering.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from .graph import WeightedGraph

WEIGHT_DIGITS = 6

# Mean degree measured at b=10 (n=1000, 20 seeds each); see calibrate().
DEGREE_TABLE_B10 = {
    0.0: 2.00,
    0.05: 2.75,
    0.1: 3.43,
    0.25: 5.26,
    0.5: 7.60,
    0.75: 9.37,
    0.8: 9.69,
    0.85: 9.98,
    0.9: 10.32,
    1.0: 10.82,
    1.5: 12.97,
    2.0: 14.48,
}

# Sparse regime at n=10000, b=10 (10 seeds each).
DEGREE_TABLE_B10_N10K = {
    0.05: 2.84,
    0.06: 2.98,
    0.065: 3.04,
    0.07: 3.11,
}


@dataclass(frozen=True)
class GeneratorParams:
    n: int
    b: int = 10
    d: float = 1.0
    pareto_scale: float = 2.0
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if self.b < 1 or (self.n > 1 and self.b >= self.n):
            raise ValueError(f"window b must satisfy 1 <= b < n (got b={self.b}, n={self.n})")
        if not 0 <= self.d <= self.b:
            raise ValueError(f"d must lie in [0, b] (got {self.d})")
        if not self.pareto_scale > 0:
            raise ValueError(f"pareto shape must be positive (got {self.pareto_scale})")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def to_json(self) -> dict:
        return asdict(self)


def _structure_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng([seed, 0])


def sample_weights(n: int, pareto_scale: float, seed: int) -> list[Fraction]:
    """``n`` Pareto draws with minimum 1 and the given shape, floored to 6 decimals."""
    if not pareto_scale > 0:
        raise ValueError("pareto shape must be positive")
    rng = np.random.default_rng([seed, 1])
    draws = 1.0 + rng.pareto(pareto_scale, size=n)
    q = 10**WEIGHT_DIGITS
    return [Fraction(math.floor(x * q), q) for x in draws]


def chordal_edges(n: int, b: int, d: float, seed: int) -> list[set[int]]:
    rng = _structure_rng(seed)
    adj = [set() for _ in range(n)]
    if n < 2:
        return adj
    p = d / b
    extra = rng.random((n, b)) < p
    picks = rng.random(n)
    for i in range(1, n):
        lo = max(0, i - b)
        width = i - lo
        nb = {lo + int(picks[i] * width)}
        nb.update(lo + j for j in np.flatnonzero(extra[i, :width]).tolist())
        for u in nb:
            adj[i].add(u)
            adj[u].add(i)
    for i in range(n - 1, 0, -1):
        earlier = [u for u in adj[i] if u < i]
        for a in earlier:
            adj[a].update(c for c in earlier if c != a)
    return adj


def generate_chordal(params: GeneratorParams) -> WeightedGraph:
    adj = chordal_edges(params.n, params.b, params.d, params.seed)
    edges = [(u, v) for u in range(params.n) for v in adj[u] if u < v]
    weights = sample_weights(params.n, params.pareto_scale, params.seed)
    return WeightedGraph.from_edges(params.n, edges, weights)


def generator_meta(params: GeneratorParams) -> dict:
    return {"generator": params.to_json()}


def mean_degree(g: WeightedGraph) -> float:
    return 2 * g.num_edges / g.n if g.n else 0.0


def calibrate(ds, n: int = 1000, b: int = 10, seeds: int = 20) -> dict[float, float]:
    """Pilot runs: mean degree for each ``d``."""
    out = {}
    for d in ds:
        degs = []
        for s in range(seeds):
            adj = chordal_edges(n, b, d, s)
            degs.append(sum(len(a) for a in adj) / n)
        out[d] = float(np.mean(degs))
    return out


def d_for_mean_degree(target: float, table: dict[float, float] | None = None) -> float:
    """Invert a calibration table by linear interpolation."""
    table = DEGREE_TABLE_B10 if table is None else table
    pts = sorted(table.items())
    if target <= pts[0][1]:
        return pts[0][0]
    for (d0, y0), (d1, y1) in zip(pts, pts[1:]):
        if y0 <= target <= y1:
            return d0 + (d1 - d0) * (target - y0) / (y1 - y0)
    return pts[-1][0]


def first_fit_tree(k: int) -> tuple[int, list[tuple[int, int]], list[int]]:
    """Tree ``T_k`` on ``2**(k-1)`` vertices that forces First-Fit to use ``k`` colours.

    ``T_1`` is a single vertex; ``T_k`` is a new root joined to the roots of
    ``T_1 .. T_{k-1}``.  Returns ``(n, edges, order)`` where ``order`` is the
    First-Fit order (sub-trees first, root last).
    """
    edges: list[tuple[int, int]] = []
    order: list[int] = []
    counter = [0]

    def build(j: int) -> int:
        kids = [build(i) for i in range(1, j)]
        v = counter[0]
        counter[0] += 1
        order.append(v)
        edges.extend((c, v) for c in kids)
        return v

    build(k)
    return counter[0], edges, order


def quantization_example(k: int = 5) -> WeightedGraph:
    """``T_k`` with weights falling by a factor ``n**4 + 1`` along the First-Fit order.

    Without quantization the greedy replays First-Fit and needs ``k`` colours
    on a bipartite graph; quantization flattens everything below the heaviest
    remaining vertex to zero.
    """
    n, edges, order = first_fit_tree(k)
    ratio = n**4 + 1
    weights = [0] * n
    for rank, v in enumerate(order):
        weights[v] = ratio ** (n - 1 - rank)
    return WeightedGraph.from_edges(n, edges, weights)
