"""Exact desk-scale oracles for dimension, chromatic number and tiny boolean dimension."""
from .coloring import Coloring, color_count, degeneracy_coloring, exact_chromatic_number, find_k_coloring, greedy_coloring, is_proper
from .dimension import Deadline, DimensionResult, SolverTimeout, decide_dimension, dimension, is_reversible
from .small_search import (
    BooleanSearchResult,
    LocalDecision,
    ScaleExceeded,
    decide_boolean_dimension_small,
    decide_local_dimension_low,
)

__all__ = [
    "BooleanSearchResult",
    "Coloring",
    "Deadline",
    "DimensionResult",
    "LocalDecision",
    "ScaleExceeded",
    "SolverTimeout",
    "color_count",
    "decide_boolean_dimension_small",
    "degeneracy_coloring",
    "decide_dimension",
    "decide_local_dimension_low",
    "dimension",
    "exact_chromatic_number",
    "find_k_coloring",
    "greedy_coloring",
    "is_proper",
    "is_reversible",
]
