"""Propagation kernel for the alldifferent constraint.

Four consistency levels are available through :class:`Level`:
pairwise decomposition, bound, range and hyper-arc consistency.
"""

from .bounds import HallInterval, Overflow, bc_filter, find_hall_intervals
from .decomp import Disequality, ac_filter, decomp_filter, decompose
from .engine import FILTERS, SearchStats, propagate, solve
from .fileformat import ParseError, parse_problem, serialize_problem
from .generators import gen_benchmark
from .model import (AllDifferent, Domain, DomainStore, Infeasible, Level, ModelError,
                    Ordering, Problem, ValidationError, compare_stores, is_solution,
                    validate)
from .ranges import HallSet, find_hall_sets, rc_filter
from .regin import (Matching, ValueGraph, build_value_graph, dump_value_graph, gac_filter,
                    mark_removable_edges, maximum_matching)

__all__ = [
    "AllDifferent", "Disequality", "Domain", "DomainStore", "FILTERS", "HallInterval",
    "HallSet", "Infeasible", "Level", "Matching", "ModelError", "Ordering", "Overflow",
    "ParseError", "Problem", "SearchStats", "ValidationError", "ValueGraph",
    "ac_filter", "bc_filter", "build_value_graph", "compare_stores", "decomp_filter",
    "decompose", "dump_value_graph", "find_hall_intervals", "find_hall_sets",
    "gac_filter", "gen_benchmark", "is_solution", "mark_removable_edges",
    "maximum_matching", "parse_problem", "propagate", "rc_filter", "serialize_problem",
    "solve", "validate",
]
