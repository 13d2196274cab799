"""Exact polynomial-time primitives on chordal graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .errors import NonChordalInput
from .graph import WeightedGraph, integer_weights

__all__ = [
    "CliqueTree",
    "build_clique_tree",
    "chromatic_number",
    "is_chordal",
    "is_perfect_elimination_ordering",
    "max_weight_independent_set",
    "maximum_cardinality_search",
    "min_weight_vertex_cover",
    "optimal_coloring",
    "perfect_elimination_ordering",
]


def _visit_order(g: WeightedGraph) -> list[int]:
    indptr, indices = g.csr
    return kernels.mcs_order(g.n, indptr, indices)


def maximum_cardinality_search(g: WeightedGraph) -> tuple[int, ...]:
    """Elimination ordering from maximum cardinality search.

    The ordering is the reverse of the MCS visit order, so it is a perfect
    elimination ordering exactly when ``g`` is chordal.
    """
    return tuple(reversed(_visit_order(g)))


def is_perfect_elimination_ordering(g: WeightedGraph, order: Sequence[int]) -> bool:
    indptr, indices = g.csr
    return kernels.peo_violation(list(order), indptr, indices) < 0


def perfect_elimination_ordering(g: WeightedGraph) -> tuple[int, ...]:
    """Return a perfect elimination ordering or raise :class:`NonChordalInput`."""
    order = maximum_cardinality_search(g)
    indptr, indices = g.csr
    bad = kernels.peo_violation(list(order), indptr, indices)
    if bad >= 0:
        raise NonChordalInput(
            f"graph is not chordal: later neighbours of vertex {bad} do not form a clique",
            witness=bad,
        )
    return order


def is_chordal(g: WeightedGraph) -> bool:
    return is_perfect_elimination_ordering(g, maximum_cardinality_search(g))


def optimal_coloring(g: WeightedGraph, peo: Sequence[int] | None = None) -> list[int]:
    """Minimum colouring, greedy along the reverse perfect elimination ordering.

    Returns ``colors[v]`` in ``0..chi-1``.
    """
    if peo is None:
        peo = perfect_elimination_ordering(g)
    colors = [-1] * g.n
    for v in reversed(peo):
        used = {colors[u] for u in g.adj[v] if colors[u] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


def chromatic_number(g: WeightedGraph) -> int:
    return max(optimal_coloring(g), default=-1) + 1


def color_classes(colors: Sequence[int], vertices: Iterable[int] | None = None) -> list[list[int]]:
    """Group vertices by colour index; classes in colour order, members ascending."""
    if vertices is None:
        vertices = range(len(colors))
    k = 1 + max((colors[v] for v in vertices), default=-1)
    classes = [[] for _ in range(k)]
    for v in sorted(vertices):
        classes[colors[v]].append(v)
    return classes


# -- maximum weight independent set ------------------------------------------


def frank_mwis(order: Sequence[int], adj: Sequence[frozenset], keys) -> set[int]:
    """Frank's two-phase algorithm on the vertices of ``order``.

    ``order`` must be a perfect elimination ordering of the subgraph it spans
    (restricting a PEO to an induced subgraph keeps it perfect).  ``keys`` maps
    vertex -> non-negative integer weight; only positive keys can be chosen.
    """
    pos = {v: i for i, v in enumerate(order)}
    reduced = {v: keys[v] for v in order}
    red = []
    for v in order:
        r = reduced[v]
        if r > 0:
            red.append(v)
            pv = pos[v]
            for u in adj[v]:
                pu = pos.get(u)
                if pu is not None and pu > pv:
                    reduced[u] -= r
    chosen: set[int] = set()
    for v in reversed(red):
        if adj[v].isdisjoint(chosen):
            chosen.add(v)
    return chosen


def tiebreak_keys(primary: dict | Sequence[int], n: int, vertices: Iterable[int]) -> dict:
    """Fold a deterministic tie-break into integer keys.

    Each key becomes ``primary * 2**n + 2**(n-1-v)``: among sets of equal
    primary weight the unique optimum is the one containing the smallest
    vertex id on which candidates differ.
    """
    return {v: (primary[v] << n) + (1 << (n - 1 - v)) for v in vertices}


def weight_keys(g: WeightedGraph) -> list[int]:
    """Integer keys ordering sets by (#infinite members, finite weight)."""
    ints, _ = integer_weights(g.weights)
    big = sum(x for x in ints if x is not None) + 1
    return [big if x is None else x for x in ints]


def max_weight_independent_set(
    g: WeightedGraph, peo: Sequence[int] | None = None
) -> frozenset:
    """Maximum weight independent set.

    Infinite weights dominate: sets are compared first by how many
    infinite-weight vertices they contain, then by finite weight.  Ties go to
    the set containing the smallest differing vertex id.
    """
    if peo is None:
        peo = perfect_elimination_ordering(g)
    keys = tiebreak_keys(weight_keys(g), g.n, range(g.n))
    return frozenset(frank_mwis(peo, g.adj, keys))


def min_weight_vertex_cover(g: WeightedGraph, peo: Sequence[int] | None = None) -> frozenset:
    """Complement of :func:`max_weight_independent_set`."""
    s = max_weight_independent_set(g, peo)
    return frozenset(v for v in range(g.n) if v not in s)


def infinite_vertices_independent(g: WeightedGraph) -> bool:
    infs = set(g.infinite_vertices)
    return all(g.adj[v].isdisjoint(infs) for v in infs)


# -- clique trees ------------------------------------------------------------


@dataclass(frozen=True)
class CliqueTree:
    """Tree over the maximal cliques of a chordal graph.

    Disconnected graphs get one tree anyway: components are joined by edges
    with an empty separator, which keeps the running-intersection property.
    """

    bags: tuple[frozenset, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def neighbors(self) -> list[list[int]]:
        nb = [[] for _ in self.bags]
        for a, b in self.edges:
            nb[a].append(b)
            nb[b].append(a)
        return nb

    def rooted(self, root: int = 0) -> tuple[list[int], list[int]]:
        """``(parent, order)``: parent bag per bag (-1 at root), BFS order from root."""
        k = len(self.bags)
        parent = [-1] * k
        if k == 0:
            return parent, []
        nb = self.neighbors()
        seen = [False] * k
        seen[root] = True
        order = []
        dq = deque([root])
        while dq:
            a = dq.popleft()
            order.append(a)
            for b in sorted(nb[a]):
                if not seen[b]:
                    seen[b] = True
                    parent[b] = a
                    dq.append(b)
        return parent, order


def build_clique_tree(g: WeightedGraph) -> CliqueTree:
    """Clique tree from the maximum cardinality search visit order."""
    visit = _visit_order(g)
    indptr, indices = g.csr
    if kernels.peo_violation(visit[::-1], indptr, indices) >= 0:
        raise NonChordalInput()
    vpos = [0] * g.n
    for i, v in enumerate(visit):
        vpos[v] = i
    bags: list[set] = []
    edges: list[tuple[int, int]] = []
    clique_of = [-1] * g.n
    prev_len = -1
    for i, v in enumerate(visit):
        prev = [u for u in g.adj[v] if vpos[u] < i]
        if i == 0 or len(prev) <= prev_len:
            bags.append(set(prev) | {v})
            cur = len(bags) - 1
            if prev:
                last = max(prev, key=vpos.__getitem__)
                edges.append((clique_of[last], cur))
            elif cur > 0:
                edges.append((0, cur))
        else:
            cur = len(bags) - 1
            bags[cur].add(v)
        clique_of[v] = cur
        prev_len = len(prev)
    return CliqueTree(tuple(frozenset(b) for b in bags), tuple(edges))
