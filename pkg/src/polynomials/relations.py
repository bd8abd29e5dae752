"""Identities tying distance polynomials to edge-distance polynomials."""

from typing import List

from ..algebra import RatPoly
from ..classify import EdgeIntersectionArray
from .models import CheckRecord, PolySequence, RecurrenceError


def _alternating_sum(vseq: PolySequence, i: int) -> RatPoly:
    """p_i - p_{i-1} + ... + (-1)^i p_0."""
    total = RatPoly()
    for k in range(i + 1):
        term = vseq[k]
        total = total + (term if (i - k) % 2 == 0 else -term)
    return total


def relate_vertex_edge_polys(vseq: PolySequence, eseq: PolySequence, bipartite: bool) -> List[CheckRecord]:
    """Check every applicable vertex/edge polynomial relation, one record per identity and index."""
    d = vseq.top
    expected_top = d - 1 if bipartite else d
    if eseq.top != expected_top:
        return [
            CheckRecord(
                name="sequence-lengths",
                passed=False,
                detail=f"edge sequence ends at {eseq.top}, expected {expected_top} for d={d}",
            )
        ]

    records: List[CheckRecord] = []
    for i in range(d):
        records.append(
            CheckRecord(name="edge-as-alternating-sum", index=i, passed=eseq[i] == _alternating_sum(vseq, i))
        )
    for i in range(1, d):
        records.append(
            CheckRecord(name="vertex-as-consecutive-sum", index=i, passed=vseq[i] == eseq[i] + eseq[i - 1])
        )

    nonbipartite_only = "applies to nonbipartite graphs"
    bipartite_only = "applies to bipartite graphs"
    if bipartite:
        h = vseq.partial_sum(d)
        rhs = h - eseq.partial_sum(d - 1) - eseq.partial_sum(d - 2)
        records.append(CheckRecord(name="top-edge-as-half-alternating-sum", index=d, skipped=nonbipartite_only))
        records.append(CheckRecord(name="top-vertex-from-edge", index=d, skipped=nonbipartite_only))
        records.append(CheckRecord(name="top-vertex-from-hoffman", index=d, passed=vseq[d] == rhs))
    else:
        previous = eseq[d - 1] if d >= 1 else RatPoly()
        records.append(
            CheckRecord(
                name="top-edge-as-half-alternating-sum",
                index=d,
                passed=eseq[d] == _alternating_sum(vseq, d) / 2,
            )
        )
        records.append(
            CheckRecord(name="top-vertex-from-edge", index=d, passed=vseq[d] == eseq[d] * 2 + previous)
        )
        records.append(CheckRecord(name="top-vertex-from-hoffman", index=d, skipped=bipartite_only))
    return records


def reconstruct_next_poly(
    pt_i: RatPoly,
    p_i: RatPoly,
    at_i: int,
    c_i: int,
    bt_prev: int,
    delta: int,
) -> RatPoly:
    """p_{i+1} = ((x + delta) p~_i - b~_{i-1} p_i) / (a~_i + c_i), valid from i = 1.

    Raises:
        RecurrenceError: for i = 0 (constant p~_i) or a zero denominator.
    """
    if pt_i.degree is None or pt_i.degree < 1:
        raise RecurrenceError("Reconstruction starts at i = 1; got a constant edge polynomial")
    denominator = at_i + c_i
    if denominator == 0:
        raise RecurrenceError(f"a~_i + c_i = 0 at degree {pt_i.degree}")
    return ((RatPoly.x() + delta) * pt_i - p_i * bt_prev) / denominator


def check_lemma_edge_counts(earr: EdgeIntersectionArray) -> bool:
    """a~_i = b~_{i-1} - b~_i for i = 1..d~-1 (nonbipartite arrays)."""
    return all(
        earr.a_at(i) == earr.b_at(i - 1) - earr.b_at(i) for i in range(1, earr.edge_diameter)
    )
