"""Exact zero forcing number and iteration index of small graphs."""

from .families import FamilySpec, ParameterError, build_family, family
from .forcing import (
    ForcingTrace,
    color_change_step,
    enumerate_chronological_lists,
    extract_maximal_chains,
    generic_kernel_rounds,
    llfc,
    reversal,
    run_forcing,
)
from .graph import Graph, GraphError, VertexSet, cartesian_product, degree_stats, parse_edge_list, serialize_edge_list
from .search import BudgetExceeded, all_minimum_zfs, iteration_index, solve, zero_forcing_number

__version__ = "0.1.0"
