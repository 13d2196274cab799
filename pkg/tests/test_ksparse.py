import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import chordal_graphs
from oracles import brute_max_independent_size, random_chordal
from ivdesign.errors import InfeasibleInfiniteCosts, NonChordalInput
from ivdesign.exact import brute_force_min_cost_ksparse, brute_force_min_ksparse
from ivdesign.graph import INF, WeightedGraph
from ivdesign.ksparse import (
    default_lambda_grid,
    frontier_csv,
    frontier_sweep,
    infinity_proxy,
    ksparse_lower_bound,
    lower_envelope,
    min_size_ksparse_design,
    min_vertex_cover_size,
    size_upper_bound,
    size_ratio_bound,
    weighted_ksparse_design,
)
from ivdesign.separating import design_cost, verify_separating


def test_trivial():
    empty = WeightedGraph.from_edges(4, [])
    assert ksparse_lower_bound(empty, 2) == 0
    assert min_size_ksparse_design(empty, 2).size == 0
    assert ksparse_lower_bound(WeightedGraph.complete(4), 1) == 3
    d = min_size_ksparse_design(WeightedGraph.complete(2), 1)
    assert d.size == 1 and len(d.interventions[0]) == 1


def test_errors():
    c4 = WeightedGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    with pytest.raises(NonChordalInput):
        ksparse_lower_bound(c4, 1)
    with pytest.raises(NonChordalInput):
        min_size_ksparse_design(c4, 1)
    with pytest.raises(InfeasibleInfiniteCosts):
        weighted_ksparse_design(WeightedGraph.complete(2, [INF, INF]), 1, 0)
    with pytest.raises(ValueError):
        min_size_ksparse_design(WeightedGraph.complete(2), 0)
    with pytest.raises(ValueError):
        frontier_sweep(WeightedGraph.complete(2), 1, [])


def test_chunks_ascending():
    star = WeightedGraph.from_edges(6, [(0, i) for i in range(1, 6)])
    d = min_size_ksparse_design(star, 2)
    assert [sorted(s) for s in d.interventions] == [[0]]
    d = weighted_ksparse_design(star.with_weights([100, 1, 1, 1, 1, 1]), 2, 0).design
    assert [sorted(s) for s in d.interventions] == [[1, 2], [3, 4], [5]]


@given(chordal_graphs(max_n=12), st.integers(1, 4))
def test_algorithm2_bounds(g, k):
    d = min_size_ksparse_design(g, k)
    assert verify_separating(g, d) and d.is_k_sparse(k)
    assert ksparse_lower_bound(g, k) <= d.size <= size_upper_bound(g, k)
    support = d.support()
    assert sum(len(s) for s in d.interventions) == len(support)
    # never-intervened vertices form a maximum independent set
    rest = [v for v in range(g.n) if v not in support]
    assert g.is_independent(rest)
    if g.n <= 12:
        assert len(rest) == brute_max_independent_size(g)


@given(chordal_graphs(max_n=7), st.integers(1, 3))
def test_algorithm2_vs_brute_force(g, k):
    d = min_size_ksparse_design(g, k)
    _, opt = brute_force_min_ksparse(g, k)
    assert opt <= d.size <= size_ratio_bound(g, k) * opt or opt == d.size == 0


@given(chordal_graphs(max_n=7, unit=True), st.integers(1, 3))
def test_unit_weight_cost_optimal(g, k):
    d = min_size_ksparse_design(g, k)
    assert design_cost(g, d) == min_vertex_cover_size(g)
    _, best = brute_force_min_cost_ksparse(g, k, d.size)
    assert best == design_cost(g, d)


@given(chordal_graphs(max_n=10, allow_inf=True), st.integers(1, 3))
def test_weighted_properties(g, k):
    try:
        recs = frontier_sweep(g, k)
    except InfeasibleInfiniteCosts:
        return
    for r in recs:
        assert verify_separating(g, r.design) and r.design.is_k_sparse(k)
        assert r.size >= ksparse_lower_bound(g, k)
        assert r.cost == design_cost(g, r.design)
    zero = weighted_ksparse_design(g, k, 0)
    assert all(zero.cost <= r.cost for r in recs)
    top = weighted_ksparse_design(g, k, INF)
    assert len(top.design.support()) <= len(zero.design.support())
    sizes = [r.size for r in recs]
    assert sizes == sorted(sizes)


@given(chordal_graphs(max_n=10), st.integers(1, 3))
def test_large_lambda_gives_min_cardinality_cover(g, k):
    big = infinity_proxy(g)
    r = weighted_ksparse_design(g, k, big)
    assert len(r.design.support()) == min_vertex_cover_size(g)
    # identical weights: the cover is the unit-weight one, so sizes agree
    unit = g.unit_weights()
    assert weighted_ksparse_design(unit, k, INF).size == min_size_ksparse_design(unit, k).size


def test_envelope_and_csv():
    rng = random.Random(4)
    g = random_chordal(40, rng)
    recs = frontier_sweep(g, 3)
    env = lower_envelope(recs)
    assert [r.size for r in env] == sorted({r.size for r in env})
    assert all(a.cost > b.cost for a, b in zip(env, env[1:]))
    text = frontier_csv(recs)
    lines = text.splitlines()
    assert lines[0] == "lambda,size,cost,normalized_cost"
    assert len(lines) == len(recs) + 1
    assert max(float(l.split(",")[3]) for l in lines[1:]) == 1.0
    one = frontier_sweep(g, 3, [Fraction(1)])
    assert len(one) == 1


def test_default_grid():
    g = WeightedGraph.from_edges(3, [(0, 1)], [1, 2, 4])
    grid = default_lambda_grid(g)
    assert grid[0] == 0 and grid[-1] == INF
    assert len(grid) >= 16


def test_cheap_cover_can_exceed_size_bound():
    # three disjoint K_{1,3} with heavy centres: lambda=0 intervenes on all leaves
    edges = [(4 * s, 4 * s + i) for s in range(3) for i in (1, 2, 3)]
    weights = [100 if v % 4 == 0 else 1 for v in range(12)]
    g = WeightedGraph.from_edges(12, edges, weights)
    cheap = weighted_ksparse_design(g, 1, 0)
    assert cheap.size == 9 > size_upper_bound(g, 1) == 3 + 3 + 1
    assert weighted_ksparse_design(g, 1, INF).size == 3
