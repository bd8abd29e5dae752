"""Exhaustive classifiers: distance-regular, edge-distance-regular, homogeneous."""

from typing import Dict, List, Optional, Tuple

import numpy as np
import structlog

from ..algebra import min_poly_degree
from ..graphs import (
    DistanceData,
    Graph,
    compute_distance_data,
    is_bipartite,
    is_regular,
    odd_girth,
)
from ..partitions import edge_local_counts, is_equitable, local_counts, pair_partition
from .conversions import edge_array_from_vertex_array
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

logger = structlog.get_logger(__name__)

Counts = Tuple[int, int, int]


def check_drg(g: Graph, dd: DistanceData) -> DistanceRegularVerdict:
    """Scan every ordered pair (w, u); counts must depend on dist(w, u) only."""
    seen: Dict[int, Tuple[Counts, Tuple[int, int]]] = {}
    for u in range(g.n):
        for w in range(g.n):
            lc = local_counts(g, dd, w, u)
            key = lc.as_tuple()
            if lc.i not in seen:
                seen[lc.i] = (key, (w, u))
                continue
            first_key, first_pair = seen[lc.i]
            if first_key != key:
                witness = Witness(
                    kind=WitnessKind.DISTANCE_REGULAR,
                    stratum=lc.i,
                    first=first_pair,
                    second=(w, u),
                    first_counts=first_key,
                    second_counts=key,
                    detail=f"(c, a, b) differs at distance {lc.i}",
                )
                logger.debug("Not distance-regular", stratum=lc.i, first=first_pair, second=(w, u))
                return DistanceRegularVerdict(witness=witness)

    d = dd.diameter
    degree = sum(seen[0][0])
    array = IntersectionArray(
        degree=degree,
        b=tuple(seen[i][0][2] for i in range(d)),
        c=tuple(seen[i][0][0] for i in range(1, d + 1)),
    )
    logger.debug("Distance-regular", array=array.to_text())
    return DistanceRegularVerdict(array=array)


def classify_drg(g: Graph, dd: DistanceData) -> Optional[IntersectionArray]:
    return check_drg(g, dd).array


def check_edrg(g: Graph, dd: DistanceData) -> EdgeDistanceRegularVerdict:
    """Scan every edge and every vertex; counts must depend on the layer index only."""
    seen: Dict[int, Tuple[Counts, Tuple[int, int, int]]] = {}
    for u, v in g.edges:
        for w in range(g.n):
            lc = edge_local_counts(g, dd, u, v, w)
            key = lc.as_tuple()
            if lc.i not in seen:
                seen[lc.i] = (key, (u, v, w))
                continue
            first_key, first = seen[lc.i]
            if first_key != key:
                witness = Witness(
                    kind=WitnessKind.EDGE_DISTANCE_REGULAR,
                    stratum=lc.i,
                    first=first,
                    second=(u, v, w),
                    first_counts=first_key,
                    second_counts=key,
                    detail=f"(c~, a~, b~) differs in edge layer {lc.i}",
                )
                logger.debug("Not edge-distance-regular", layer=lc.i, first=first, second=(u, v, w))
                return EdgeDistanceRegularVerdict(witness=witness)

    k = dd.edge_diameter
    degree = sum(seen[0][0])
    array = EdgeIntersectionArray(
        degree=degree,
        b=tuple(seen[i][0][2] for i in range(k)),
        c=tuple(seen[i][0][0] for i in range(1, k + 1)),
    )
    logger.debug("Edge-distance-regular", array=array.to_text())
    return EdgeDistanceRegularVerdict(array=array)


def classify_edrg(g: Graph, dd: DistanceData) -> Optional[EdgeIntersectionArray]:
    return check_edrg(g, dd).array


def check_homogeneous(g: Graph, dd: DistanceData) -> HomogeneityVerdict:
    """Every ordered adjacent pair must induce an equitable partition with one common quotient."""
    reference: Optional[HomogeneousQuotient] = None
    reference_edge: Tuple[int, int] = (0, 0)
    for u, v in g.ordered_edges():
        pp = pair_partition(g, dd, u, v)
        labels = pp.labels
        matrix = is_equitable(g, [pp.cells[label] for label in labels])
        if matrix is None:
            return HomogeneityVerdict(
                witness=Witness(
                    kind=WitnessKind.HOMOGENEOUS,
                    first=(u, v),
                    second=(u, v),
                    detail="partition of this pair is not equitable",
                )
            )
        quotient = HomogeneousQuotient(
            labels=tuple(labels),
            sizes=tuple(len(pp.cells[label]) for label in labels),
            matrix=tuple(tuple(row) for row in matrix),
        )
        if reference is None:
            reference, reference_edge = quotient, (u, v)
        elif quotient != reference:
            return HomogeneityVerdict(
                witness=Witness(
                    kind=WitnessKind.HOMOGENEOUS,
                    first=reference_edge,
                    second=(u, v),
                    detail="quotients of the two pairs differ",
                )
            )
    return HomogeneityVerdict(quotient=reference)


def classify_homogeneous(g: Graph, dd: DistanceData) -> Optional[HomogeneousQuotient]:
    return check_homogeneous(g, dd).quotient


def is_generalized_odd(g: Graph, dd: DistanceData, arr: IntersectionArray) -> bool:
    """a_0 = ... = a_{d-1} = 0 and a_d != 0, cross-checked against odd girth 2d + 1.

    Raises:
        ConsistencyError: when the array pattern and the odd girth disagree.
    """
    d = arr.diameter
    a = arr.a
    by_array = d >= 1 and all(x == 0 for x in a[:d]) and a[d] != 0
    by_girth = odd_girth(g) == 2 * d + 1
    if by_array != by_girth:
        raise ConsistencyError(
            f"Array {arr.to_text()} says generalized odd={by_array}, odd girth says {by_girth}"
        )
    return by_array


def sphere_sizes(dd: DistanceData) -> Optional[List[int]]:
    """n_i = |G_i(u)| when it does not depend on u."""
    sizes = []
    for i in range(dd.diameter + 1):
        per_vertex = (dd.dist == i).sum(axis=1)
        if per_vertex.min() != per_vertex.max():
            return None
        sizes.append(int(per_vertex[0]))
    return sizes


def _distance_layers(dd: DistanceData) -> List[np.ndarray]:
    return [(dd.dist == i).astype(np.int64) for i in range(dd.diameter + 1)]


def triple_intersection(g: Graph, dd: DistanceData, i: int, j: int, k: int) -> TripleIntersection:
    """|G_i(u) n G_j(v)| for dist(u, v) = k, collapsed to one value when constant."""
    if not 0 <= k <= dd.diameter:
        raise ValueError(f"No pairs at distance {k}; diameter is {dd.diameter}")
    if min(i, j) < 0 or max(i, j) > dd.diameter:
        return TripleIntersection(i=i, j=j, k=k, value=0)
    layers = _distance_layers(dd)
    product = layers[i] @ layers[j]
    mask = dd.dist == k
    values = product[mask]
    if values.min() == values.max():
        return TripleIntersection(i=i, j=j, k=k, value=int(values[0]))
    rows, cols = np.nonzero(mask)
    table = {(int(u), int(v)): int(product[u, v]) for u, v in zip(rows, cols)}
    return TripleIntersection(i=i, j=j, k=k, table=table)


def intersection_numbers(dd: DistanceData) -> Optional[np.ndarray]:
    """Array p[i, j, k] of all triple intersection numbers, None when any is not constant."""
    d = dd.diameter
    layers = _distance_layers(dd)
    masks = [dd.dist == k for k in range(d + 1)]
    p = np.zeros((d + 1, d + 1, d + 1), dtype=np.int64)
    for i in range(d + 1):
        for j in range(d + 1):
            product = layers[i] @ layers[j]
            for k in range(d + 1):
                values = product[masks[k]]
                if values.min() != values.max():
                    return None
                p[i, j, k] = values[0]
    return p


def classify_graph(g: Graph, dd: Optional[DistanceData] = None) -> ClassificationReport:
    """Run every classifier on a connected graph and assemble the report."""
    dd = dd or compute_distance_data(g)
    bipartite = is_bipartite(g)
    drg = check_drg(g, dd)
    edrg = check_edrg(g, dd)
    homogeneity = check_homogeneous(g, dd)
    generalized_odd = drg.array is not None and is_generalized_odd(g, dd, drg.array)
    sizes = sphere_sizes(dd)

    notes: List[str] = []
    if edrg.array is not None and dd.edge_diameter == 0:
        notes.append("single edge: edge-distance-regular by convention (one edge layer)")
    if drg.array is not None and edrg.array is not None:
        expected = edge_array_from_vertex_array(drg.array, bipartite)
        if expected is not None and expected != edrg.array:
            notes.append(
                f"edge array {edrg.array.to_text()} differs from the converted {expected.to_text()}"
            )

    report = ClassificationReport(
        n=g.n,
        m=g.m,
        degree=is_regular(g),
        bipartite=bipartite,
        odd_girth=odd_girth(g),
        diameter=dd.diameter,
        edge_diameter=dd.edge_diameter,
        spectral_diameter=min_poly_degree(g.adjacency_matrix()) - 1,
        distance_regular=drg.array,
        distance_regular_witness=drg.witness,
        edge_distance_regular=edrg.array,
        edge_distance_regular_witness=edrg.witness,
        homogeneous=homogeneity.quotient,
        homogeneity_witness=homogeneity.witness,
        generalized_odd=generalized_odd,
        sphere_sizes=tuple(sizes) if sizes is not None else None,
        notes=notes,
    )
    logger.info(
        "Graph classified",
        n=g.n,
        m=g.m,
        distance_regular=report.distance_regular is not None,
        edge_distance_regular=report.edge_distance_regular is not None,
        homogeneous=report.homogeneous is not None,
        generalized_odd=generalized_odd,
    )
    return report
