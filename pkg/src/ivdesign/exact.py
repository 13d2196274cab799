"""Ground-truth solvers: clique-tree DP for min-cost colouring, plus brute force.

The DP never tracks concrete colour vectors.  Inside a bag every vertex has a
distinct colour, and any permutation of colours that preserves Hamming weight
preserves cost, so the optimum of a subtree depends only on which weight class
each separator vertex uses.  A bag state is therefore a class labelling, with
at most ``C(m, j)`` vertices in class ``j``.  Concrete colours are assigned
top-down afterwards.

A vertex of degree ``d`` is only offered the classes ``0..J`` where ``J`` is
the first class whose cumulative colour count exceeds ``d``: any optimum can
move such a vertex to a free colour of class ``<= J`` without raising cost.
"""

from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from . import kernels
from .chordal import build_clique_tree, chromatic_number, infinite_vertices_independent
from .errors import BudgetExceeded, ColorsExhausted, InfeasibleInfiniteCosts
from .graph import INF, Weight, WeightedGraph, integer_weights
from .separating import (
    Coloring,
    InterventionDesign,
    canonical_colors,
    coloring_cost,
    popcount,
)

DEFAULT_DP_BUDGET = 200_000_000


def dp_budget_from_env() -> int:
    raw = os.environ.get("IVDESIGN_DP_BUDGET")
    return int(raw) if raw else DEFAULT_DP_BUDGET


@dataclass(frozen=True)
class ColorMenu:
    """``{0,1}^m`` grouped by Hamming weight, canonical order inside each class."""

    m: int
    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, m: int) -> "ColorMenu":
        buckets = [[] for _ in range(m + 1)]
        for c in canonical_colors(m):
            buckets[popcount(c)].append(c)
        return cls(m, tuple(tuple(b) for b in buckets))

    @property
    def colors(self) -> list[int]:
        return [c for cls in self.classes for c in cls]

    def capacity(self, j: int) -> int:
        return len(self.classes[j])

    def capacities(self) -> list[int]:
        return [math.comb(self.m, j) for j in range(self.m + 1)]


@dataclass
class DPStats:
    bags: int
    max_bag: int
    table_estimate: int
    backend: str
    wall_ms: float = 0.0

    def to_json(self) -> dict:
        return {
            "bags": self.bags,
            "max_bag": self.max_bag,
            "table_estimate": self.table_estimate,
            "backend": self.backend,
            "wall_ms": round(self.wall_ms, 3),
        }


class ExactResult(NamedTuple):
    coloring: Coloring
    cost: Weight
    stats: DPStats


def class_radix(g: WeightedGraph, m: int) -> list[int]:
    """Number of weight classes each vertex may use in some optimum."""
    caps = [math.comb(m, j) for j in range(m + 1)]
    radix = []
    for v in range(g.n):
        if g.weights[v] == INF:
            radix.append(1)
            continue
        need = len(g.adj[v]) + 1
        acc, j = 0, 0
        while j <= m:
            acc += caps[j]
            if acc >= need:
                break
            j += 1
        radix.append(min(j, m) + 1)
    return radix


@lru_cache(maxsize=4096)
def _feasible_labellings(radix: tuple[int, ...], caps: tuple[int, ...]) -> int:
    """Class labellings of a bag with ``radix`` that respect the class capacities."""
    ways = {(0,) * len(caps): 1}
    for r in radix:
        nxt = {}
        for counts, k in ways.items():
            for j in range(r):
                if counts[j] < caps[j]:
                    c = counts[:j] + (counts[j] + 1,) + counts[j + 1 :]
                    nxt[c] = nxt.get(c, 0) + k
        ways = nxt
    return sum(ways.values())


def dp_table_estimate(g: WeightedGraph, m: int, tree=None) -> int:
    """Number of class labellings the DP enumerates, summed over bags."""
    if tree is None:
        tree = build_clique_tree(g)
    return _estimate(tree, class_radix(g, m), m)


def _estimate(tree, radix: list[int], m: int) -> int:
    caps = tuple(math.comb(m, j) for j in range(m + 1))
    return sum(
        _feasible_labellings(tuple(sorted(radix[v] for v in bag)), caps) for bag in tree.bags
    )


def exact_min_cost_coloring(
    g: WeightedGraph,
    m: int,
    budget: int | None = None,
    root: int = 0,
    backend: str | None = None,
) -> ExactResult:
    """Minimum-cost proper colouring into ``{0,1}^m`` by clique-tree DP.

    Raises :class:`BudgetExceeded` before doing any work when the table
    estimate is above ``budget`` (default: ``IVDESIGN_DP_BUDGET`` or 2e8).
    """
    t0 = time.perf_counter()
    if m < 0:
        raise ValueError("m must be non-negative")
    tree = build_clique_tree(g)
    if not infinite_vertices_independent(g):
        raise InfeasibleInfiniteCosts("two adjacent vertices have infinite cost")
    chi = chromatic_number(g)
    if chi > 1 << m:
        raise ColorsExhausted(
            f"chromatic number {chi} exceeds the {1 << m} colours of m={m}",
            needed=chi,
            available=1 << m,
        )
    if budget is None:
        budget = dp_budget_from_env()
    radix = class_radix(g, m)
    estimate = _estimate(tree, radix, m)
    if estimate > budget:
        raise BudgetExceeded(
            f"DP table estimate {estimate} exceeds budget {budget}; lower m or n",
            estimate=estimate,
            cap=budget,
        )
    ints, denom = integer_weights(g.weights)
    finite = [0 if x is None else x for x in ints]
    inf = m * sum(finite) + 1
    used_backend = "python" if inf >= kernels.INT64_SAFE else (backend or kernels.BACKEND)
    menu = ColorMenu.of(m)
    caps = menu.capacities()
    stats = DPStats(len(tree.bags), tree.width + 1, estimate, used_backend)
    if g.n == 0:
        stats.wall_ms = (time.perf_counter() - t0) * 1e3
        return ExactResult(Coloring(m, ()), Fraction(0), stats)

    parent, order = tree.rooted(root)
    children = [[] for _ in tree.bags]
    for b in order[1:]:
        children[parent[b]].append(b)
    layout = {}
    for b in reversed(order):
        bag = tree.bags[b]
        sep = sorted(bag & tree.bags[parent[b]]) if parent[b] >= 0 else []
        new = sorted(bag - set(sep))
        positions = sep + new
        where = {v: p for p, v in enumerate(positions)}
        rad = [radix[v] for v in positions]
        unit = [0] * len(sep) + [finite[v] for v in new]
        kid_specs = []
        for c in children[b]:
            csep, _, ctable, _ = layout[c]
            kid_specs.append((ctable, [where[v] for v in csep], _strides([radix[v] for v in csep])))
        table, argmin = kernels.dp_bag(rad, len(sep), unit, caps, kid_specs, inf, backend=used_backend)
        layout[b] = (sep, new, table, argmin)

    best = int(layout[order[0]][2][0])
    if best >= inf:
        raise InfeasibleInfiniteCosts(
            f"no proper colouring into {{0,1}}^{m} leaves every infinite-cost vertex uncoloured"
        )

    colors = [-1] * g.n
    for b in order:
        sep, new, _, argmin = layout[b]
        sidx = 0
        for v, s in zip(sep, _strides([radix[v] for v in sep])):
            sidx += popcount(colors[v]) * s
        code = int(argmin[sidx])
        used = {colors[v] for v in sep}
        labels = _decode(code, [radix[v] for v in new])
        for v, j in zip(new, labels):
            c = next(c for c in menu.classes[j] if c not in used)
            used.add(c)
            colors[v] = c
    coloring = Coloring(m, tuple(colors))
    cost = Fraction(best, denom)
    assert coloring.is_proper(g) and coloring_cost(g, coloring) == cost
    stats.wall_ms = (time.perf_counter() - t0) * 1e3
    return ExactResult(coloring, cost, stats)


def _strides(radix: list[int]) -> list[int]:
    out = [0] * len(radix)
    s = 1
    for p in range(len(radix) - 1, -1, -1):
        out[p] = s
        s *= radix[p]
    return out


def _decode(code: int, radix: list[int]) -> list[int]:
    digits = [0] * len(radix)
    for p in range(len(radix) - 1, -1, -1):
        code, digits[p] = divmod(code, radix[p])
    return digits


# -- brute force -------------------------------------------------------------


def brute_force_min_cost(
    g: WeightedGraph, m: int, max_n: int = 12, max_m: int = 3
) -> tuple[Coloring, Weight]:
    """Exhaustive search over all proper maps ``V -> {0,1}^m`` (branch and bound).

    Shares nothing with the DP: concrete colours, no symmetry reduction.
    """
    if g.n > max_n or m > max_m:
        raise BudgetExceeded(
            f"brute force limited to n <= {max_n}, m <= {max_m} (got n={g.n}, m={m})"
        )
    if not infinite_vertices_independent(g):
        raise InfeasibleInfiniteCosts("two adjacent vertices have infinite cost")
    ints, denom = integer_weights(g.weights)
    palette = list(canonical_colors(m))
    order = sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))
    assign = [-1] * g.n
    best_cost = [None]
    best = [None]

    def dfs(i: int, cost: int) -> None:
        if best_cost[0] is not None and cost >= best_cost[0]:
            return
        if i == len(order):
            best_cost[0] = cost
            best[0] = list(assign)
            return
        v = order[i]
        taken = {assign[u] for u in g.adj[v]}
        w = ints[v]
        for c in palette:
            if c in taken:
                continue
            h = popcount(c)
            if w is None and h:
                continue
            assign[v] = c
            dfs(i + 1, cost + (h * w if h else 0))
            assign[v] = -1

    dfs(0, 0)
    if best[0] is None:
        if chromatic_number(g) > 1 << m:
            raise ColorsExhausted(f"no proper colouring with {1 << m} colours")
        raise InfeasibleInfiniteCosts("every proper colouring intervenes on an infinite-cost vertex")
    return Coloring(m, tuple(best[0])), Fraction(best_cost[0], denom)


def _edge_index(g: WeightedGraph):
    edges = list(g.edges)
    return edges, (1 << len(edges)) - 1


def _candidate_sets(g: WeightedGraph, k: int):
    """All non-empty vertex sets of size <= k with their cut bitmask over edges."""
    edges, _ = _edge_index(g)
    out = []
    for size in range(1, min(k, g.n) + 1):
        for s in combinations(range(g.n), size):
            ss = set(s)
            mask = 0
            for i, (u, v) in enumerate(edges):
                if (u in ss) != (v in ss):
                    mask |= 1 << i
            if mask:
                out.append((s, mask))
    return out


def brute_force_min_ksparse(
    g: WeightedGraph, k: int, max_n: int = 8
) -> tuple[InterventionDesign, int]:
    """Smallest k-sparse separating system by iterative deepening.

    Each level branches on the sets cutting the lowest-numbered uncut edge.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n > max_n:
        raise BudgetExceeded(f"k-sparse brute force limited to n <= {max_n} (got {g.n})")
    edges, full = _edge_index(g)
    if not edges:
        return InterventionDesign(()), 0
    seen_masks = {}
    for s, mask in _candidate_sets(g, k):
        seen_masks.setdefault(mask, s)
    cands = [(s, mask) for mask, s in seen_masks.items()]
    max_cut = max(popcount(mask) for _, mask in cands)
    by_edge = [[c for c in cands if c[1] >> i & 1] for i in range(len(edges))]
    failed = set()
    chosen = []

    def dfs(uncut: int, depth: int) -> bool:
        if uncut == 0:
            return True
        if depth == 0 or popcount(uncut) > depth * max_cut or (uncut, depth) in failed:
            return False
        e = (uncut & -uncut).bit_length() - 1
        for s, mask in by_edge[e]:
            chosen.append(s)
            if dfs(uncut & ~mask, depth - 1):
                return True
            chosen.pop()
        failed.add((uncut, depth))
        return False

    size = 1
    while not dfs(full, size):
        size += 1
    return InterventionDesign.of(chosen), size


def brute_force_min_cost_ksparse(
    g: WeightedGraph, k: int, max_size: int, max_n: int = 8
) -> tuple[InterventionDesign, Weight]:
    """Cheapest k-sparse separating system with at most ``max_size`` interventions."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n > max_n:
        raise BudgetExceeded(f"k-sparse brute force limited to n <= {max_n} (got {g.n})")
    edges, full = _edge_index(g)
    if not edges:
        return InterventionDesign(()), Fraction(0)
    ints, denom = integer_weights(g.weights)
    cheapest = {}
    for s, mask in _candidate_sets(g, k):
        if any(ints[v] is None for v in s):
            continue
        cost = sum(ints[v] for v in s)
        if mask not in cheapest or cost < cheapest[mask][1]:
            cheapest[mask] = (s, cost)
    by_edge = [
        sorted(
            ((s, mask, cost) for mask, (s, cost) in cheapest.items() if mask >> i & 1),
            key=lambda t: t[2],
        )
        for i in range(len(edges))
    ]
    best = [None, None]
    visited = {}
    chosen = []

    def dfs(uncut: int, left: int, cost: int) -> None:
        if best[0] is not None and cost >= best[0]:
            return
        if uncut == 0:
            best[0] = cost
            best[1] = list(chosen)
            return
        if left == 0:
            return
        key = (uncut, left)
        if key in visited and visited[key] <= cost:
            return
        visited[key] = cost
        e = (uncut & -uncut).bit_length() - 1
        for s, mask, c in by_edge[e]:
            chosen.append(s)
            dfs(uncut & ~mask, left - 1, cost + c)
            chosen.pop()

    dfs(full, max_size, 0)
    if best[0] is None:
        raise InfeasibleInfiniteCosts(
            f"no finite-cost {k}-sparse separating system with at most {max_size} interventions"
        )
    return InterventionDesign.of(best[1]), Fraction(best[0], denom)
