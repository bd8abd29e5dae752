"""Graph core: the immutable graph type, distances and structural properties."""

from .graph import Edge, Graph, GraphError
from .distances import (
    DisconnectedGraphError,
    DistanceData,
    bfs_from_set,
    compute_distance_data,
    distance_matrix_family,
    edge_distance_table,
    incidence_matrix_family,
)
from .properties import (
    AnalysisError,
    bipartition,
    is_bipartite,
    is_regular,
    odd_girth,
    require_analysable,
)

__all__ = [
    "Edge",
    "Graph",
    "GraphError",
    "DisconnectedGraphError",
    "AnalysisError",
    "DistanceData",
    "bfs_from_set",
    "compute_distance_data",
    "distance_matrix_family",
    "edge_distance_table",
    "incidence_matrix_family",
    "bipartition",
    "is_bipartite",
    "is_regular",
    "odd_girth",
    "require_analysable",
]
