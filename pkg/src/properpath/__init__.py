"""Proper-path edge colorings of graph products: exact solvers, constructions, checks."""
from .coloring import (
    ConnectivityReport,
    EdgeColoring,
    greedy_proper_edge_coloring,
    is_odd_even_proper,
    is_proper_connected,
    proper_path_exists,
    proper_walk_exists,
)
from .constructive import (
    ConstructionResult,
    color_cartesian,
    color_direct,
    color_direct_k2,
    color_lexicographic,
    color_strong,
    color_topology,
)
from .errors import InvalidParameter, SearchBudgetExceeded
from .graph import INF, Graph
from .products import ProductGraph, ProductKind, build_topology, predicted_distance, product
from .solver import PcCertificate, SearchConfig, odd_cycle_decomposition, oepc_exact, pc_bounds, pc_exact

__version__ = "0.1.0"

__all__ = [
    "ConnectivityReport", "EdgeColoring", "greedy_proper_edge_coloring", "is_odd_even_proper",
    "is_proper_connected", "proper_path_exists", "proper_walk_exists",
    "ConstructionResult", "color_cartesian", "color_direct", "color_direct_k2",
    "color_lexicographic", "color_strong", "color_topology",
    "InvalidParameter", "SearchBudgetExceeded", "INF", "Graph",
    "ProductGraph", "ProductKind", "build_topology", "predicted_distance", "product",
    "PcCertificate", "SearchConfig", "odd_cycle_decomposition", "oepc_exact", "pc_bounds", "pc_exact",
]
