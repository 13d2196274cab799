"""Weighted undirected graphs with exact, extended non-negative weights.

Weights are :class:`fractions.Fraction` values or ``math.inf`` ("cannot
intervene").  All cost arithmetic stays exact; the integer scaling helpers
below are what the solvers and compiled kernels consume.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import GraphFormatError

Weight = Union[Fraction, float]
INF = math.inf


def as_weight(x) -> Weight:
    """Coerce ``x`` to an exact non-negative weight or ``math.inf``."""
    if isinstance(x, str):
        s = x.strip().lower()
        if s in ("inf", "+inf", "infinity"):
            return INF
        try:
            w = Fraction(s)
        except ValueError:
            raise ValueError(f"not a weight: {x!r}") from None
    elif isinstance(x, bool):
        raise ValueError(f"not a weight: {x!r}")
    elif isinstance(x, float):
        if math.isnan(x):
            raise ValueError("weight is NaN")
        if math.isinf(x):
            if x < 0:
                raise ValueError("weight is -inf")
            return INF
        # repr keeps the decimal the user typed rather than the binary expansion
        w = Fraction(repr(x))
    elif isinstance(x, (int, Fraction, Decimal)):
        w = Fraction(x)
    else:
        raise ValueError(f"not a weight: {x!r}")
    if w < 0:
        raise ValueError(f"negative weight {x!r}")
    return w


def is_inf(w: Weight) -> bool:
    return isinstance(w, float) and math.isinf(w)


def format_rational(w: Weight) -> Union[int, str, Decimal]:
    """JSON-friendly exact form: int, terminating Decimal, ``"p/q"`` or ``"inf"``."""
    if is_inf(w):
        return "inf"
    w = Fraction(w)
    if w.denominator == 1:
        return w.numerator
    den = w.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{w.numerator}/{w.denominator}"
    k = max(twos, fives)
    scaled = w.numerator * (10**k // w.denominator)
    return Decimal(scaled).scaleb(-k)


def rational_str(w: Weight) -> str:
    return str(format_rational(w))


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph on vertices ``0..n-1`` with per-vertex weights.

    ``labels`` records original vertex ids when the graph was produced by
    :func:`induced_subgraph`; it does not take part in equality.
    """

    n: int
    adj: tuple[frozenset, ...]
    weights: tuple
    labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n or len(self.weights) != self.n:
            raise ValueError("adjacency/weights length does not match n")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n or v not in self.adj[u]:
                    raise ValueError(f"adjacency not symmetric at edge ({v}, {u})")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        weights: Iterable | None = None,
    ) -> "WeightedGraph":
        if n < 0:
            raise ValueError("n must be non-negative")
        nbrs = [set() for _ in range(n)]
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        if weights is None:
            ws = (Fraction(1),) * n
        else:
            ws = tuple(as_weight(w) for w in weights)
        return cls(n, tuple(frozenset(s) for s in nbrs), ws)

    @classmethod
    def complete(cls, n: int, weights=None) -> "WeightedGraph":
        return cls.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)], weights)

    @classmethod
    def path(cls, n: int, weights=None) -> "WeightedGraph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)], weights)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def infinite_vertices(self) -> list[int]:
        return [v for v, w in enumerate(self.weights) if is_inf(w)]

    def total_weight(self) -> Weight:
        return sum(self.weights, Fraction(0))

    def with_weights(self, weights: Iterable) -> "WeightedGraph":
        return WeightedGraph(self.n, self.adj, tuple(as_weight(w) for w in weights), self.labels)

    def unit_weights(self) -> "WeightedGraph":
        return self.with_weights([1] * self.n)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(indptr, indices) with sorted neighbour lists, int64."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        for v in range(self.n):
            indptr[v + 1] = indptr[v] + len(self.adj[v])
        indices = np.fromiter(
            (u for v in range(self.n) for u in sorted(self.adj[v])),
            dtype=np.int64,
            count=int(indptr[-1]),
        )
        return indptr, indices

    def is_independent(self, s: Iterable[int]) -> bool:
        s = set(s)
        return all(not (self.adj[v] & s) for v in s)

    def is_vertex_cover(self, s: Iterable[int]) -> bool:
        s = set(s)
        return all(u in s or v in s for u, v in self.edges)

    def set_weight(self, s: Iterable[int]) -> Weight:
        return sum((self.weights[v] for v in s), Fraction(0))


def induced_subgraph(g: WeightedGraph, s: Iterable[int]) -> WeightedGraph:
    """Subgraph induced by ``s``, relabelled to ``0..|s|-1`` in ascending id order.

    The original ids are kept in ``labels``.
    """
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"unknown vertex id {v}")
    index = {v: i for i, v in enumerate(verts)}
    adj = tuple(frozenset(index[u] for u in g.adj[v] if u in index) for v in verts)
    return WeightedGraph(len(verts), adj, tuple(g.weights[v] for v in verts), tuple(verts))


def integer_weights(weights: Sequence[Weight]) -> tuple[list, int]:
    """Scale finite weights to integers over a common denominator.

    Returns ``(ints, denom)`` where ``ints[v]`` is ``None`` for infinite weights.
    """
    denom = 1
    for w in weights:
        if not is_inf(w):
            denom = math.lcm(denom, Fraction(w).denominator)
    ints = [None if is_inf(w) else int(Fraction(w) * denom) for w in weights]
    return ints, denom


# -- JSON ------------------------------------------------------------------


def _dump_value(x) -> str:
    if isinstance(x, Decimal):
        return str(x)
    return json.dumps(x, sort_keys=True)


def _plain(x):
    # meta parsed back from disk carries Decimal floats; repr round-trips them
    if isinstance(x, Decimal):
        return float(x)
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    if isinstance(x, list):
        return [_plain(v) for v in x]
    return x


def dump_graph(g: WeightedGraph, meta: dict | None = None) -> str:
    """Canonical JSON text: fixed key order, one line, exact weights."""
    parts = [
        f'"n": {g.n}',
        '"edges": [' + ", ".join(f"[{u}, {v}]" for u, v in g.edges) + "]",
        '"weights": [' + ", ".join(_dump_value(format_rational(w)) for w in g.weights) + "]",
    ]
    if meta is not None:
        parts.append('"meta": ' + json.dumps(_plain(meta), sort_keys=True))
    return "{" + ", ".join(parts) + "}\n"


def _fail(msg: str):
    raise GraphFormatError(msg)


def parse_graph(text: str) -> tuple[WeightedGraph, dict | None]:
    """Parse graph JSON text; returns ``(graph, meta)``."""
    try:
        obj = json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        _fail("top level: expected a JSON object")
    for key in ("n", "edges", "weights"):
        if key not in obj:
            _fail(f"missing field {key!r}")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        _fail(f"n: expected a non-negative integer, got {n!r}")
    edges = obj["edges"]
    if not isinstance(edges, list):
        _fail("edges: expected a list")
    seen = set()
    clean = []
    for i, e in enumerate(edges):
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            _fail(f"edges[{i}]: expected [u, v] with integer endpoints, got {e!r}")
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            _fail(f"edges[{i}]: endpoint out of range 0..{n - 1}: {e!r}")
        if u == v:
            _fail(f"edges[{i}]: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            _fail(f"edges[{i}]: duplicate edge {list(key)}")
        seen.add(key)
        clean.append(key)
    weights = obj["weights"]
    if not isinstance(weights, list) or len(weights) != n:
        _fail(f"weights: expected a list of length n={n}")
    ws = []
    for i, w in enumerate(weights):
        if isinstance(w, str) and w.strip().lower() not in ("inf", "+inf", "infinity") and "/" not in w:
            _fail(f"weights[{i}]: expected a number or \"inf\", got {w!r}")
        try:
            ws.append(as_weight(w))
        except ValueError as exc:
            _fail(f"weights[{i}]: {exc}")
    meta = obj.get("meta")
    return WeightedGraph.from_edges(n, clean, ws), meta


def load_graph(path: str | Path) -> tuple[WeightedGraph, dict | None]:
    return parse_graph(Path(path).read_text())


def save_graph(g: WeightedGraph, path: str | Path, meta: dict | None = None) -> None:
    Path(path).write_text(dump_graph(g, meta))
