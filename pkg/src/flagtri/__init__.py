"""Combinatorics of dense flag triangulations of 3-manifolds."""

from .complex import SimplicialComplex, clique_complex, is_closed_flag_3_manifold
from .constructions import figure2a, figure2b, join_of_cycles, realize_gamma
from .fascinating import check_fascinating
from .graph import Graph, format_graph, parse_graph
from .joinlike import detect_joinlike, is_join_of_two_cycles
from .search import SearchSpec, classify, enumerate_dense_fascinating

__all__ = [
    "Graph",
    "SearchSpec",
    "SimplicialComplex",
    "check_fascinating",
    "classify",
    "clique_complex",
    "detect_joinlike",
    "enumerate_dense_fascinating",
    "figure2a",
    "figure2b",
    "format_graph",
    "is_closed_flag_3_manifold",
    "is_join_of_two_cycles",
    "join_of_cycles",
    "parse_graph",
    "realize_gamma",
]
