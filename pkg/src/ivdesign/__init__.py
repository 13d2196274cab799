"""Minimum-cost and k-sparse intervention design on chordal graphs."""

from .chordal import (
    build_clique_tree,
    chromatic_number,
    is_chordal,
    max_weight_independent_set,
    maximum_cardinality_search,
    min_weight_vertex_cover,
    optimal_coloring,
    perfect_elimination_ordering,
)
from .errors import (
    BudgetExceeded,
    ColorsExhausted,
    GraphFormatError,
    ImproperColoring,
    InfeasibleInfiniteCosts,
    IvDesignError,
    NonChordalInput,
)
from .exact import (
    brute_force_min_cost,
    brute_force_min_cost_ksparse,
    brute_force_min_ksparse,
    exact_min_cost_coloring,
)
from .generate import GeneratorParams, generate_chordal, sample_weights
from .graph import WeightedGraph, dump_graph, load_graph, parse_graph, save_graph
from .greedy import baseline_design, greedy_coloring, greedy_min_cost_design
from .kernels import BACKEND
from .ksparse import (
    frontier_sweep,
    ksparse_lower_bound,
    min_size_ksparse_design,
    weighted_ksparse_design,
)
from .separating import (
    Coloring,
    InterventionDesign,
    coloring_cost,
    coloring_to_design,
    design_cost,
    design_to_coloring,
    verify_separating,
)

__version__ = "0.1.0"
