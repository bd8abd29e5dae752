"""Run every identity that applies to a graph and collect the outcomes."""

from typing import AbstractSet, Callable, Iterable, List, Optional

import numpy as np
import structlog

from ..algebra import RatMatrix, sum_matrices
from ..classify import (
    ClassificationReport,
    EdgeIntersectionArray,
    IntersectionArray,
    classify_graph,
    edge_array_from_vertex_array,
    intersection_numbers,
    sphere_sizes,
    vertex_array_from_edge_array,
)
from ..graphs import DistanceData, Graph, compute_distance_data, distance_matrix_family, incidence_matrix_family
from ..logging_config import log_verdict
from ..partitions import ProofFactRecord, proof_fact_oracles
from ..polynomials import (
    CheckRecord,
    InnerProductSpace,
    PolySequence,
    check_distance_regular_via_pd,
    check_edge_diameter_profile,
    check_edrg_via_incidence,
    check_hoffman,
    check_incidence_products,
    check_lemma_edge_counts,
    edge_predistance_polys,
    hoffman_poly,
    polys_from_array,
    predistance_polys,
    reconstruct_next_poly,
    relate_vertex_edge_polys,
)
from .models import LedgerEntry, LedgerStatus, VerificationLedger

logger = structlog.get_logger(__name__)

IRREGULAR = "graph is not regular"
NOT_DRG = "graph is not distance-regular"
NOT_EDRG = "graph is not edge-distance-regular"


def _verdict(name: str, ok: bool, detail: str = "") -> LedgerEntry:
    return LedgerEntry(name=name, status=LedgerStatus.PASS if ok else LedgerStatus.FAIL, detail=detail)


def _skip(name: str, reason: str) -> LedgerEntry:
    return LedgerEntry(name=name, status=LedgerStatus.SKIP, detail=reason)


def _from_records(name: str, checks: Iterable[CheckRecord]) -> LedgerEntry:
    records = list(checks)
    failed = [r for r in records if not r.ok]
    if failed:
        labels = ", ".join(f"{r.name}[{r.index}]" if r.index is not None else r.name for r in failed)
        detail = failed[0].detail
        return _verdict(name, False, f"failed: {labels}" + (f" ({detail})" if detail else ""))
    evaluated = [r for r in records if r.skipped is None]
    if records and not evaluated:
        return _skip(name, records[0].skipped or "")
    return _verdict(name, True, f"{len(evaluated)} identities hold")


def proof_fact_records(
    g: Graph, dd: DistanceData, zero_a: AbstractSet[int] = frozenset()
) -> List[ProofFactRecord]:
    """Every neighbour-count identity for every ordered edge and every vertex."""
    records: List[ProofFactRecord] = []
    for u, v in g.ordered_edges():
        for w in range(g.n):
            records.extend(proof_fact_oracles(g, dd, u, v, w, zero_a))
    return records


class _Context:
    """Data shared by the individual checks of one run."""

    def __init__(self, g: Graph, dd: DistanceData, report: ClassificationReport):
        self.g = g
        self.dd = dd
        self.report = report
        self.delta: Optional[int] = report.degree
        self.bipartite = report.bipartite
        self.drg: Optional[IntersectionArray] = report.distance_regular
        self.edrg: Optional[EdgeIntersectionArray] = report.edge_distance_regular
        self.vertex_polys: Optional[PolySequence] = None
        self.edge_polys: Optional[PolySequence] = None
        self.space = InnerProductSpace.from_graph(g)
        if self.delta is not None:
            self.vertex_polys = predistance_polys(self.space, self.delta)
            self.edge_polys = edge_predistance_polys(self.space, self.delta)


Check = Callable[[_Context], LedgerEntry]


# graph-level identities

def _distance_partition(ctx: _Context) -> LedgerEntry:
    g = ctx.g
    total = sum_matrices(distance_matrix_family(g, ctx.dd), g.n, g.n)
    return _verdict("distance-partition", total == RatMatrix.ones(g.n, g.n), f"A_0 + ... + A_{ctx.dd.diameter} = J")


def _incidence_gram(ctx: _Context) -> LedgerEntry:
    g = ctx.g
    b0 = incidence_matrix_family(g, ctx.dd)[0]
    degrees = RatMatrix(np.diag([g.degree(v) for v in range(g.n)]))
    return _verdict("incidence-gram", b0 @ b0.T == g.adjacency_matrix() + degrees, "B_0 B_0^T = A + diag(deg)")


def _spectral_diameter_bound(ctx: _Context) -> LedgerEntry:
    D, d = ctx.dd.diameter, ctx.report.spectral_diameter
    return _verdict("spectral-diameter-bound", D <= d, f"D={D}, d={d}")


def _edge_diameter_range(ctx: _Context) -> LedgerEntry:
    D, De = ctx.dd.diameter, ctx.dd.edge_diameter
    return _verdict("edge-diameter-range", D - 1 <= De <= D, f"D={D}, D~={De}")


# classification cross-checks

def _edrg_characterization(ctx: _Context) -> LedgerEntry:
    edrg = ctx.edrg is not None
    condition = ctx.drg is not None and (ctx.bipartite or ctx.report.generalized_odd)
    detail = f"edge-distance-regular={edrg}, distance-regular and (bipartite or generalized odd)={condition}"
    if edrg != condition:
        witness = ctx.report.edge_distance_regular_witness or ctx.report.distance_regular_witness
        if witness is not None:
            detail += f"; witness {witness.detail} at {witness.first} vs {witness.second}"
    return _verdict("edrg-characterization", edrg == condition, detail)


def _edge_array_conversion(ctx: _Context) -> LedgerEntry:
    name = "edge-array-conversion"
    if ctx.drg is None or ctx.edrg is None:
        return _skip(name, "needs both intersection arrays")
    forward = edge_array_from_vertex_array(ctx.drg, ctx.bipartite)
    try:
        backward = vertex_array_from_edge_array(ctx.edrg, ctx.bipartite)
    except ValueError as e:
        return _verdict(name, False, str(e))
    if forward == ctx.edrg and backward == ctx.drg:
        return _verdict(name, True, f"{ctx.drg.to_text()} <-> {ctx.edrg.to_text()}")
    converted = forward.to_text() if forward is not None else "none"
    return _verdict(name, False, f"converted {converted} / {backward.to_text()}")


def _edrg_implies_homogeneous(ctx: _Context) -> LedgerEntry:
    name = "edrg-implies-homogeneous"
    if ctx.edrg is None:
        return _skip(name, NOT_EDRG)
    witness = ctx.report.homogeneity_witness
    return _verdict(name, ctx.report.homogeneous is not None, witness.detail if witness else "")


def _edge_diameter_profile(ctx: _Context) -> LedgerEntry:
    name = "edge-diameter-profile"
    if ctx.edrg is None:
        return _skip(name, NOT_EDRG)
    record = check_edge_diameter_profile(ctx.dd, ctx.report.spectral_diameter, ctx.bipartite)
    return _verdict(name, record.passed, record.detail)


def _generalized_odd_girth(ctx: _Context) -> LedgerEntry:
    name = "generalized-odd-girth"
    if ctx.drg is None:
        return _skip(name, NOT_DRG)
    by_girth = ctx.report.odd_girth == 2 * ctx.dd.diameter + 1
    return _verdict(
        name,
        by_girth == ctx.report.generalized_odd,
        f"odd girth {ctx.report.odd_girth}, diameter {ctx.dd.diameter}",
    )


def _intersection_number_symmetry(ctx: _Context) -> LedgerEntry:
    name = "intersection-number-symmetry"
    if ctx.drg is None:
        return _skip(name, NOT_DRG)
    p = intersection_numbers(ctx.dd)
    sizes = sphere_sizes(ctx.dd)
    if p is None or sizes is None:
        return _verdict(name, False, "triple intersection numbers are not constant")
    d = ctx.dd.diameter
    for i in range(d + 1):
        for j in range(d + 1):
            for k in range(d + 1):
                if sizes[k] * p[i, j, k] != sizes[i] * p[k, j, i]:
                    return _verdict(name, False, f"n_k p_ij^k != n_i p_kj^i at (i, j, k)=({i}, {j}, {k})")
    return _verdict(name, True, "n_k p_ij^k = n_i p_kj^i")


def _triangle_counts(ctx: _Context) -> LedgerEntry:
    name = "triangle-counts"
    if ctx.drg is None:
        return _skip(name, NOT_DRG)
    p = intersection_numbers(ctx.dd)
    sizes = sphere_sizes(ctx.dd)
    if p is None or sizes is None:
        return _verdict(name, False, "triple intersection numbers are not constant")
    a = ctx.drg.a
    for i in range(ctx.dd.diameter + 1):
        if ctx.drg.degree * p[i, i, 1] != sizes[i] * a[i]:
            return _verdict(name, False, f"delta p_ii^1 != n_i a_i at i={i}")
    return _verdict(name, True, "delta p_ii^1 = n_i a_i")


# vertex polynomials

def _predistance_orthogonality(ctx: _Context) -> LedgerEntry:
    name = "predistance-orthogonality"
    if ctx.vertex_polys is None or ctx.delta is None:
        return _skip(name, IRREGULAR)
    polys = ctx.vertex_polys
    for i in range(len(polys)):
        for j in range(i + 1):
            value = ctx.space.inner_product(polys[i], polys[j])
            expected = polys[i](ctx.delta) if i == j else 0
            if value != expected:
                return _verdict(name, False, f"<p_{i}, p_{j}> = {value}, expected {expected}")
    return _verdict(name, True, f"p_0..p_{polys.top} orthogonal, ||p_i||^2 = p_i(delta)")


def _sphere_sizes(ctx: _Context) -> LedgerEntry:
    name = "sphere-sizes"
    if ctx.drg is None or ctx.vertex_polys is None or ctx.delta is None:
        return _skip(name, NOT_DRG)
    sizes = sphere_sizes(ctx.dd) or []
    values = [p(ctx.delta) for p in ctx.vertex_polys.polys]
    return _verdict(name, values == sizes, f"n_i = {sizes}")


def _vertex_two_constructions(ctx: _Context) -> LedgerEntry:
    name = "vertex-two-constructions"
    if ctx.drg is None or ctx.vertex_polys is None:
        return _skip(name, NOT_DRG)
    return _verdict(name, polys_from_array(ctx.drg).same_polys(ctx.vertex_polys), "recurrence = Gram-Schmidt")


def _distance_polynomials(ctx: _Context) -> LedgerEntry:
    name = "distance-polynomials"
    if ctx.drg is None or ctx.vertex_polys is None:
        return _skip(name, NOT_DRG)
    return _verdict(name, check_distance_regular_via_pd(ctx.g, ctx.dd, ctx.vertex_polys, full=True), "p_i(A) = A_i")


def _top_distance_characterization(ctx: _Context) -> LedgerEntry:
    name = "top-distance-characterization"
    if ctx.vertex_polys is None:
        return _skip(name, IRREGULAR)
    holds = check_distance_regular_via_pd(ctx.g, ctx.dd, ctx.vertex_polys)
    return _verdict(name, holds == (ctx.drg is not None), f"p_d(A) = A_d is {holds}")


def _hoffman(ctx: _Context) -> LedgerEntry:
    name = "hoffman"
    if ctx.vertex_polys is None:
        return _skip(name, IRREGULAR)
    return _verdict(name, check_hoffman(ctx.g, hoffman_poly(ctx.vertex_polys)), "H(A) = J")


# edge polynomials

def _edge_two_constructions(ctx: _Context) -> LedgerEntry:
    name = "edge-two-constructions"
    if ctx.edrg is None or ctx.edge_polys is None:
        return _skip(name, NOT_EDRG)
    return _verdict(name, polys_from_array(ctx.edrg).same_polys(ctx.edge_polys), "recurrence = Gram-Schmidt")


def _incidence_polynomials(ctx: _Context) -> LedgerEntry:
    name = "incidence-polynomials"
    if ctx.edrg is None or ctx.edge_polys is None:
        return _skip(name, NOT_EDRG)
    return _verdict(name, check_edrg_via_incidence(ctx.g, ctx.dd, ctx.edge_polys), "p~_i(A) B_0 = B_i")


def _edge_layer_size(ctx: _Context) -> LedgerEntry:
    name = "edge-layer-size"
    if ctx.edrg is None or ctx.edge_polys is None or ctx.delta is None:
        return _skip(name, NOT_EDRG)
    top = ctx.edge_polys.top
    if top != ctx.dd.edge_diameter:
        return _verdict(name, False, f"edge polynomials end at {top}, edge diameter is {ctx.dd.edge_diameter}")
    expected = 2 * ctx.edge_polys[top](ctx.delta)
    for u, v in ctx.g.edges:
        size = int((ctx.dd.edge_distances(u, v) == top).sum())
        if size != expected:
            return _verdict(name, False, f"|G_{top}(e)| = {size} != {expected} at edge {(u, v)}")
    return _verdict(name, True, f"|G_{top}(e)| = {expected}")


def _top_edge_characterization(ctx: _Context) -> LedgerEntry:
    name = "top-edge-characterization"
    if ctx.edge_polys is None:
        return _skip(name, IRREGULAR)
    holds = check_edrg_via_incidence(ctx.g, ctx.dd, ctx.edge_polys, top_only=True)
    return _verdict(name, holds == (ctx.edrg is not None), f"p~_d~(A) B_0 = B_d~ is {holds}")


def _incidence_products(ctx: _Context) -> LedgerEntry:
    name = "incidence-products"
    if ctx.drg is None or ctx.edrg is None:
        return _skip(name, NOT_EDRG)
    return _from_records(name, check_incidence_products(ctx.g, ctx.dd, ctx.edrg, ctx.drg))


def _polynomial_relations(ctx: _Context) -> LedgerEntry:
    name = "polynomial-relations"
    if ctx.edrg is None or ctx.vertex_polys is None or ctx.edge_polys is None:
        return _skip(name, NOT_EDRG)
    return _from_records(name, relate_vertex_edge_polys(ctx.vertex_polys, ctx.edge_polys, ctx.bipartite))


def _reconstruction(ctx: _Context) -> LedgerEntry:
    name = "reconstruction"
    if ctx.drg is None or ctx.edrg is None or ctx.vertex_polys is None or ctx.edge_polys is None:
        return _skip(name, NOT_EDRG)
    assert ctx.delta is not None
    vertex, edge, earr = ctx.vertex_polys, ctx.edge_polys, ctx.edrg
    last = min(vertex.top - 1, edge.top)
    if last < 1:
        return _skip(name, "diameter 1: no degree to rebuild")
    records = [
        CheckRecord(
            name="next-vertex-poly",
            index=i,
            passed=reconstruct_next_poly(
                edge[i], vertex[i], earr.a_at(i), ctx.drg.c_at(i), earr.b_at(i - 1), ctx.delta
            ) == vertex[i + 1],
        )
        for i in range(1, last + 1)
    ]
    return _from_records(name, records)


def _edge_count_lemma(ctx: _Context) -> LedgerEntry:
    name = "edge-count-lemma"
    if ctx.edrg is None:
        return _skip(name, NOT_EDRG)
    if ctx.bipartite:
        return _skip(name, "applies to nonbipartite graphs")
    return _verdict(name, check_lemma_edge_counts(ctx.edrg), "a~_i = b~_{i-1} - b~_i")


def _proof_facts(ctx: _Context) -> LedgerEntry:
    name = "proof-facts"
    zero_a = frozenset(i for i, a in enumerate(ctx.drg.a) if a == 0) if ctx.drg is not None else frozenset()
    records = proof_fact_records(ctx.g, ctx.dd, zero_a)
    evaluated = [r for r in records if r.skipped is None]
    for r in evaluated:
        if r.lhs != r.rhs:
            return _verdict(
                name,
                False,
                f"{r.fact.value} at edge {(r.u, r.v)}, vertex {r.w}: {r.lhs} != {r.rhs}",
            )
    return _verdict(
        name,
        True,
        f"{len(evaluated)} identities balanced, {len(records) - len(evaluated)} not applicable",
    )


CHECKS: List[Check] = [
    _distance_partition,
    _incidence_gram,
    _spectral_diameter_bound,
    _edge_diameter_range,
    _edrg_characterization,
    _edge_array_conversion,
    _edrg_implies_homogeneous,
    _edge_diameter_profile,
    _generalized_odd_girth,
    _intersection_number_symmetry,
    _triangle_counts,
    _predistance_orthogonality,
    _sphere_sizes,
    _vertex_two_constructions,
    _distance_polynomials,
    _top_distance_characterization,
    _hoffman,
    _edge_two_constructions,
    _incidence_polynomials,
    _edge_layer_size,
    _top_edge_characterization,
    _incidence_products,
    _polynomial_relations,
    _reconstruction,
    _edge_count_lemma,
    _proof_facts,
]


def verify_graph(
    g: Graph,
    dd: Optional[DistanceData] = None,
    report: Optional[ClassificationReport] = None,
) -> VerificationLedger:
    """Evaluate every check in :data:`CHECKS` on a connected graph."""
    dd = dd or compute_distance_data(g)
    report = report or classify_graph(g, dd)
    ctx = _Context(g, dd, report)

    ledger = VerificationLedger()
    for check in CHECKS:
        entry = check(ctx)
        ledger.entries.append(entry)
        log_verdict(entry.name, entry.status != LedgerStatus.FAIL, g.n, g.m, status=entry.status.value)

    logger.info("Verification finished", n=g.n, m=g.m, **ledger.counts())
    return ledger

