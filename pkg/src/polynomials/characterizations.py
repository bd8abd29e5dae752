"""Matrix characterizations: distance polynomials, incidence polynomials, Hoffman polynomial."""

from typing import List

import structlog

from ..algebra import RatMatrix, RatPoly, eval_poly_at_matrix
from ..classify import EdgeIntersectionArray, IntersectionArray
from ..graphs import (
    DistanceData,
    Graph,
    distance_matrix_family,
    incidence_matrix_family,
    is_regular,
)
from .models import CheckRecord, PolySequence

logger = structlog.get_logger(__name__)


def check_distance_regular_via_pd(
    g: Graph, dd: DistanceData, seq: PolySequence, full: bool = False
) -> bool:
    """p_d(A) = A_d, or p_i(A) = A_i for every i when ``full`` is set.

    False (never an error) when the graph is irregular or the sequence
    length disagrees with the diameter.
    """
    if is_regular(g) is None:
        logger.info("Distance polynomial check skipped", reason="irregular graph")
        return False
    if seq.top != dd.diameter:
        logger.info("Distance polynomial check failed", reason="spectral diameter differs", d=seq.top, diameter=dd.diameter)
        return False
    a = g.adjacency_matrix()
    family = distance_matrix_family(g, dd)
    indices = range(seq.top + 1) if full else [seq.top]
    for i in indices:
        if eval_poly_at_matrix(seq[i], a) != family[i]:
            logger.debug("Distance polynomial mismatch", index=i)
            return False
    return True


def _incidence(family: List[RatMatrix], i: int, n: int, m: int) -> RatMatrix:
    return family[i] if i < len(family) else RatMatrix.zeros(n, m)


def check_edrg_via_incidence(
    g: Graph, dd: DistanceData, seq: PolySequence, top_only: bool = False
) -> bool:
    """p~_i(A) B_0 = B_i for each i (or only i = d~), plus |G_d~(e)| = 2 p~_d~(delta) for every edge."""
    delta = is_regular(g)
    if delta is None:
        logger.info("Incidence polynomial check skipped", reason="irregular graph")
        return False
    a = g.adjacency_matrix()
    family = incidence_matrix_family(g, dd)
    b0 = family[0]
    top = seq.top
    indices = [top] if top_only else list(range(top + 1))
    for i in indices:
        if eval_poly_at_matrix(seq[i], a) @ b0 != _incidence(family, i, g.n, g.m):
            logger.debug("Incidence polynomial mismatch", index=i)
            return False

    target = 2 * seq[top](delta)
    column_sums = _incidence(family, top, g.n, g.m).data.sum(axis=0) if g.m else []
    for edge_id, size in enumerate(column_sums):
        if size != target:
            logger.debug("Top edge layer size mismatch", edge=g.edges[edge_id], size=int(size), expected=str(target))
            return False
    return True


def check_hoffman(g: Graph, h: RatPoly) -> bool:
    """H(A) = J."""
    return eval_poly_at_matrix(h, g.adjacency_matrix()) == RatMatrix.ones(g.n, g.n)


def check_incidence_products(
    g: Graph,
    dd: DistanceData,
    earr: EdgeIntersectionArray,
    varr: IntersectionArray,
) -> List[CheckRecord]:
    """B_0 B_0^T = A + delta I and B_i B_0^T = b~_{i-1} A_i + (a~_i + c_i) A_{i+1} for i = 1..d~."""
    delta = varr.degree
    distance = distance_matrix_family(g, dd)
    incidence = incidence_matrix_family(g, dd)
    b0t = incidence[0].T
    n = g.n

    def a_at(i: int) -> RatMatrix:
        return distance[i] if i < len(distance) else RatMatrix.zeros(n, n)

    records = [
        CheckRecord(
            name="incidence-gram",
            index=0,
            passed=incidence[0] @ b0t == distance[1] + RatMatrix.identity(n).scale(delta),
        )
    ]
    for i in range(1, earr.edge_diameter + 1):
        expected = a_at(i).scale(earr.b_at(i - 1)) + a_at(i + 1).scale(earr.a_at(i) + varr.c_at(i))
        actual = _incidence(incidence, i, n, g.m) @ b0t
        records.append(CheckRecord(name="incidence-product", index=i, passed=actual == expected))
    return records


def check_edge_diameter_profile(
    dd: DistanceData, spectral_diameter: int, bipartite: bool
) -> CheckRecord:
    """D equals the spectral diameter d; D~ = d - 1 when bipartite, D~ = d otherwise."""
    expected_edge = spectral_diameter - 1 if bipartite else spectral_diameter
    passed = dd.diameter == spectral_diameter and dd.edge_diameter == expected_edge
    return CheckRecord(
        name="edge-diameter-profile",
        passed=passed,
        detail=f"D={dd.diameter}, d={spectral_diameter}, D~={dd.edge_diameter}, expected D~={expected_edge}",
    )
