"""Graph separating systems and the colouring <-> intervention design equivalence.

A colour is an ``m``-bit integer: bit ``i`` set means the vertex belongs to
intervention ``I_{i+1}``.  Its Hamming weight is the number of interventions
the vertex takes part in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .chordal import chromatic_number
from .errors import GraphFormatError, ImproperColoring
from .graph import Weight, WeightedGraph, is_inf


def popcount(x: int) -> int:
    return bin(x).count("1")


def _same_weight_ascending(m: int, h: int) -> Iterator[int]:
    if h == 0:
        yield 0
        return
    x = (1 << h) - 1
    limit = 1 << m
    while x < limit:
        yield x
        # Gosper's hack: next larger integer with the same popcount
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r


def canonical_colors(m: int) -> Iterator[int]:
    """All of ``{0,1}^m`` by Hamming weight, ties by integer value ascending."""
    for h in range(m + 1):
        yield from _same_weight_ascending(m, h)


def color_string(c: int, m: int) -> str:
    return "".join("1" if c >> i & 1 else "0" for i in range(m))


def parse_color(s: str) -> int:
    if any(ch not in "01" for ch in s):
        raise ValueError(f"bad colour string {s!r}")
    return sum(1 << i for i, ch in enumerate(s) if ch == "1")


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> colour vector in ``{0,1}^m``."""

    m: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("m must be non-negative")
        top = 1 << self.m
        for v, c in enumerate(self.colors):
            if not 0 <= c < top:
                raise ValueError(f"colour of vertex {v} does not fit in {self.m} bits")

    @property
    def n(self) -> int:
        return len(self.colors)

    def weight(self, v: int) -> int:
        return popcount(self.colors[v])

    def is_proper(self, g: WeightedGraph) -> bool:
        return all(self.colors[u] != self.colors[v] for u, v in g.edges)

    def distinct_colors(self) -> int:
        return len(set(self.colors))

    def to_json(self) -> dict:
        return {"m": self.m, "colors": [color_string(c, self.m) for c in self.colors]}

    @classmethod
    def from_json(cls, obj: dict) -> "Coloring":
        try:
            m = obj["m"]
            cols = [parse_color(s) for s in obj["colors"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphFormatError(f"coloring: {exc}") from None
        for i, s in enumerate(obj["colors"]):
            if len(s) != m:
                raise GraphFormatError(f"colors[{i}]: expected {m} bits, got {s!r}")
        return cls(m, tuple(cols))


@dataclass(frozen=True)
class InterventionDesign:
    """Ordered interventions ``I_1..I_m`` (vertex subsets)."""

    interventions: tuple[frozenset, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "interventions", tuple(frozenset(s) for s in self.interventions)
        )

    @classmethod
    def of(cls, sets: Iterable[Iterable[int]]) -> "InterventionDesign":
        return cls(tuple(frozenset(s) for s in sets))

    @property
    def size(self) -> int:
        return len(self.interventions)

    def __len__(self) -> int:
        return len(self.interventions)

    @property
    def max_intervention_size(self) -> int:
        return max((len(s) for s in self.interventions), default=0)

    def is_k_sparse(self, k: int) -> bool:
        return self.max_intervention_size <= k

    def support(self) -> frozenset:
        return frozenset().union(*self.interventions)

    def to_json(self) -> dict:
        return {"m": self.size, "interventions": [sorted(s) for s in self.interventions]}

    @classmethod
    def from_json(cls, obj: dict, n: int | None = None) -> "InterventionDesign":
        if not isinstance(obj, dict) or "interventions" not in obj:
            raise GraphFormatError("design: expected an object with 'interventions'")
        sets = obj["interventions"]
        if not isinstance(sets, list):
            raise GraphFormatError("interventions: expected a list")
        if "m" in obj and obj["m"] != len(sets):
            raise GraphFormatError(f"m: {obj['m']} does not match {len(sets)} interventions")
        out = []
        for i, s in enumerate(sets):
            if not isinstance(s, list) or not all(
                isinstance(v, int) and not isinstance(v, bool) for v in s
            ):
                raise GraphFormatError(f"interventions[{i}]: expected a list of vertex ids")
            if n is not None and any(not 0 <= v < n for v in s):
                raise GraphFormatError(f"interventions[{i}]: vertex id out of range 0..{n - 1}")
            if len(set(s)) != len(s):
                raise GraphFormatError(f"interventions[{i}]: repeated vertex")
            out.append(frozenset(s))
        return cls(tuple(out))


def cut(g: WeightedGraph, s: Iterable[int]) -> set[tuple[int, int]]:
    """Edges with exactly one endpoint in ``s``, as ``(u, v)`` with ``u < v``."""
    s = set(s)
    return {(u, v) for u, v in g.edges if (u in s) != (v in s)}


def _check_ids(d: InterventionDesign, n: int) -> None:
    for i, s in enumerate(d.interventions):
        for v in s:
            if not 0 <= v < n:
                raise ValueError(f"intervention {i} contains unknown vertex {v}")


def verify_separating(g: WeightedGraph, d: InterventionDesign) -> bool:
    """True iff every edge of ``g`` is cut by some intervention."""
    _check_ids(d, g.n)
    c = design_to_coloring(d, g.n)
    return c.is_proper(g)


def coloring_to_design(c: Coloring, g: WeightedGraph | None = None) -> InterventionDesign:
    """``I_i = {v : bit i of c(v) is set}``; checks properness when ``g`` is given."""
    if g is not None:
        if g.n != c.n:
            raise ValueError("coloring does not cover the graph's vertices")
        if not c.is_proper(g):
            bad = next((u, v) for u, v in g.edges if c.colors[u] == c.colors[v])
            raise ImproperColoring(f"edge {bad} joins two vertices of the same colour")
    return InterventionDesign(
        tuple(frozenset(v for v, col in enumerate(c.colors) if col >> i & 1) for i in range(c.m))
    )


def design_to_coloring(d: InterventionDesign, n: int) -> Coloring:
    colors = [0] * n
    for i, s in enumerate(d.interventions):
        for v in s:
            colors[v] |= 1 << i
    return Coloring(d.size, tuple(colors))


def _weighted_sum(terms: Iterable[tuple[int, Weight]]) -> Weight:
    total: Weight = Fraction(0)
    for mult, w in terms:
        if mult == 0:
            continue
        if is_inf(w):
            return math.inf
        total += mult * w
    return total


def coloring_cost(g: WeightedGraph, c: Coloring) -> Weight:
    """``sum_v |c(v)|_1 * w_v``; infinite if an infinite-weight vertex is intervened."""
    if c.n != g.n:
        raise ValueError("coloring does not cover the graph's vertices")
    return _weighted_sum((popcount(c.colors[v]), g.weights[v]) for v in range(g.n))


def design_cost(g: WeightedGraph, d: InterventionDesign) -> Weight:
    """``sum_I sum_{v in I} w_v``; a vertex pays once per intervention containing it."""
    _check_ids(d, g.n)
    return _weighted_sum((1, g.weights[v]) for s in d.interventions for v in s)


def min_design_size(g: WeightedGraph) -> int:
    """``ceil(log2 chi)``, the size of the smallest separating system."""
    chi = chromatic_number(g)
    return 0 if chi <= 1 else (chi - 1).bit_length()
