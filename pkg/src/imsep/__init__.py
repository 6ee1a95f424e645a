"""Minimal and inclusion-wise minimal separators: predicates, enumeration,
the 3-SAT reduction gadgets and tools to check the reduction empirically."""

__version__ = "0.1.0"

from .errors import (
    BudgetExceededError,
    ContradictionError,
    DisconnectedGraphError,
    InvalidArgumentError,
    InvalidVertexError,
    NormalizationError,
)
from .graph import (
    Graph,
    components,
    is_ab_separator,
    is_inclusion_wise_minimal_separator,
    is_minimal_ab_separator,
    is_separator,
    parse_edge_list,
    format_edge_list,
)
from .separators import (
    SeparatorFamily,
    enumerate_iwm_bruteforce,
    enumerate_iwm_filter,
    enumerate_iwm_search,
    enumerate_minimal_separators,
    enumerate_minimal_separators_bruteforce,
    extract_inclusion_minimal,
)
from .sat import Cnf3, brute_force_sat, enumerate_satisfying, is_traversable, normalize, parse_dimacs_cnf
from .gadgets import (
    add_pendants,
    assignment_to_separator,
    banner,
    melon,
    melon_with_pendants,
    sat_to_graph,
    separator_to_assignment,
)
from .treedepth import treedepth_bruteforce
