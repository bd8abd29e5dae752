"""Pointwise neighbour-count identities around an edge, both sides counted from raw sets."""

from typing import AbstractSet, List

from ..graphs import DistanceData, Graph
from .models import PartitionError, ProofFact, ProofFactRecord


def proof_fact_oracles(
    g: Graph,
    dd: DistanceData,
    u: int,
    v: int,
    w: int,
    zero_a: AbstractSet[int] = frozenset(),
) -> List[ProofFactRecord]:
    """Evaluate the identities that apply to ``w``'s cell of the partition of ``uv``.

    ``zero_a`` holds the strata i for which a_i = 0 is known; the
    BACKWARD_LEVEL identity is evaluated only for those and reported as
    skipped otherwise.
    """
    if not g.has_edge(u, v):
        raise PartitionError(f"Vertices {u} and {v} are not adjacent")
    du, dv = dd.dist[u], dd.dist[v]
    i, j = int(du[w]), int(dv[w])
    if i == 0:
        return []

    labels = [(int(du[y]), int(dv[y])) for y in g.neighbors(w)]

    def in_layer(k: int) -> int:
        return sum(1 for r, s in labels if min(r, s) == k)

    def in_cell(r: int, s: int) -> int:
        return labels.count((r, s))

    def from_u(k: int) -> int:
        return sum(1 for r, _ in labels if r == k)

    def from_v(k: int) -> int:
        return sum(1 for _, s in labels if s == k)

    def record(fact: ProofFact, lhs: int, rhs: int) -> ProofFactRecord:
        return ProofFactRecord(fact=fact, u=u, v=v, w=w, cell=(i, j), lhs=lhs, rhs=rhs)

    records: List[ProofFactRecord] = []
    if j == i - 1:
        records.append(record(ProofFact.FORWARD, in_layer(i), from_u(i + 1) + in_cell(i, i)))
    elif j == i + 1:
        records.append(record(ProofFact.BACKWARD, in_layer(i - 1), from_u(i - 1)))
        if i in zero_a:
            records.append(
                record(ProofFact.BACKWARD_LEVEL, in_layer(i - 1) + in_layer(i), from_v(i))
            )
        else:
            records.append(
                ProofFactRecord(
                    fact=ProofFact.BACKWARD_LEVEL,
                    u=u,
                    v=v,
                    w=w,
                    cell=(i, j),
                    skipped=f"a_{i} not known to be zero",
                )
            )
    else:
        records.append(
            record(
                ProofFact.DIAGONAL,
                in_layer(i - 1),
                from_u(i - 1) + from_v(i - 1) - in_cell(i - 1, i - 1),
            )
        )
    return records
