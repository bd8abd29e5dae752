"""Trace scalar product, predistance polynomials and their matrix characterizations."""

from .models import (
    CheckRecord,
    MalformedArrayError,
    NormalizationError,
    PolyKind,
    PolySequence,
    PolySource,
    RecurrenceError,
)
from .inner_product import InnerProductSpace, edge_inner_product, inner_product
from .sequences import edge_predistance_polys, hoffman_poly, polys_from_array, predistance_polys
from .characterizations import (
    check_distance_regular_via_pd,
    check_edge_diameter_profile,
    check_edrg_via_incidence,
    check_hoffman,
    check_incidence_products,
)
from .relations import check_lemma_edge_counts, reconstruct_next_poly, relate_vertex_edge_polys

__all__ = [
    "CheckRecord",
    "MalformedArrayError",
    "NormalizationError",
    "PolyKind",
    "PolySequence",
    "PolySource",
    "RecurrenceError",
    "InnerProductSpace",
    "edge_inner_product",
    "inner_product",
    "edge_predistance_polys",
    "hoffman_poly",
    "polys_from_array",
    "predistance_polys",
    "check_distance_regular_via_pd",
    "check_edge_diameter_profile",
    "check_edrg_via_incidence",
    "check_hoffman",
    "check_incidence_products",
    "check_lemma_edge_counts",
    "reconstruct_next_poly",
    "relate_vertex_edge_polys",
]
