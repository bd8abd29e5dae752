"""Classification of graphs as distance-regular, edge-distance-regular and homogeneous."""

from .models import (
    ClassificationReport,
    ConsistencyError,
    DistanceRegularVerdict,
    EdgeDistanceRegularVerdict,
    EdgeIntersectionArray,
    HomogeneityVerdict,
    HomogeneousQuotient,
    IntersectionArray,
    TripleIntersection,
    Witness,
    WitnessKind,
)
from .conversions import edge_array_from_vertex_array, vertex_array_from_edge_array
from .classifier import (
    check_drg,
    check_edrg,
    check_homogeneous,
    classify_drg,
    classify_edrg,
    classify_graph,
    classify_homogeneous,
    intersection_numbers,
    is_generalized_odd,
    sphere_sizes,
    triple_intersection,
)

__all__ = [
    "ClassificationReport",
    "ConsistencyError",
    "DistanceRegularVerdict",
    "EdgeDistanceRegularVerdict",
    "EdgeIntersectionArray",
    "HomogeneityVerdict",
    "HomogeneousQuotient",
    "IntersectionArray",
    "TripleIntersection",
    "Witness",
    "WitnessKind",
    "edge_array_from_vertex_array",
    "vertex_array_from_edge_array",
    "check_drg",
    "check_edrg",
    "check_homogeneous",
    "classify_drg",
    "classify_edrg",
    "classify_graph",
    "classify_homogeneous",
    "intersection_numbers",
    "is_generalized_odd",
    "sphere_sizes",
    "triple_intersection",
]
