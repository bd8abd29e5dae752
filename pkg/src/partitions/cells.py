"""Local intersection counts, pair and edge partitions, equitability."""

from collections import defaultdict
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set

import structlog

from ..graphs import DistanceData, Graph
from .models import (
    CellLabel,
    EdgeLocalCounts,
    EdgePartition,
    LocalCounts,
    PairPartition,
    PartitionError,
)

logger = structlog.get_logger(__name__)


def _require_adjacent(g: Graph, u: int, v: int) -> None:
    if not g.has_edge(u, v):
        raise PartitionError(f"Vertices {u} and {v} are not adjacent")


def local_counts(g: Graph, dd: DistanceData, w: int, u: int) -> LocalCounts:
    """Neighbours of ``w`` closer to, level with and further from ``u``."""
    row = dd.dist[u]
    i = int(row[w])
    c = a = b = 0
    for y in g.neighbors(w):
        dy = row[y]
        if dy < i:
            c += 1
        elif dy == i:
            a += 1
        else:
            b += 1
    return LocalCounts(i=i, c=c, a=a, b=b)


def pair_partition(g: Graph, dd: DistanceData, u: int, v: int) -> PairPartition:
    _require_adjacent(g, u, v)
    cells: Dict[CellLabel, Set[int]] = defaultdict(set)
    for w in range(g.n):
        cells[(int(dd.dist[w, u]), int(dd.dist[w, v]))].add(w)
    return PairPartition(u=u, v=v, cells={label: frozenset(ws) for label, ws in cells.items()})


def edge_partition(g: Graph, dd: DistanceData, u: int, v: int) -> EdgePartition:
    _require_adjacent(g, u, v)
    distances = dd.edge_distances(u, v)
    ecc = int(distances.max())
    layers: List[Set[int]] = [set() for _ in range(ecc + 1)]
    for w, d in enumerate(distances):
        layers[int(d)].add(w)
    return EdgePartition(u=u, v=v, layers=tuple(frozenset(layer) for layer in layers))


def edge_local_counts(g: Graph, dd: DistanceData, u: int, v: int, w: int) -> EdgeLocalCounts:
    """Neighbours of ``w`` in the layer below, the same layer and the layer above for edge uv."""
    _require_adjacent(g, u, v)
    du, dv = dd.dist[u], dd.dist[v]
    i = int(min(du[w], dv[w]))
    c = a = b = 0
    for y in g.neighbors(w):
        dy = min(du[y], dv[y])
        if dy < i:
            c += 1
        elif dy == i:
            a += 1
        else:
            b += 1
    return EdgeLocalCounts(i=i, c=c, a=a, b=b)


def is_equitable(g: Graph, cells: Sequence[Iterable[int]]) -> Optional[List[List[int]]]:
    """Quotient matrix Q[r][s] = |G(w) n cell_s| for w in cell_r, or None if not equitable.

    Raises:
        PartitionError: when the cells do not partition the vertex set.
    """
    blocks: List[FrozenSet[int]] = [frozenset(cell) for cell in cells]
    owner: Dict[int, int] = {}
    for idx, block in enumerate(blocks):
        if not block:
            raise PartitionError(f"Cell {idx} is empty")
        for w in block:
            if w in owner:
                raise PartitionError(f"Vertex {w} lies in cells {owner[w]} and {idx}")
            owner[w] = idx
    if len(owner) != g.n or any(not 0 <= w < g.n for w in owner):
        raise PartitionError("Cells do not cover the vertex set exactly")

    quotient: List[List[int]] = []
    for idx, block in enumerate(blocks):
        row: Optional[List[int]] = None
        for w in sorted(block):
            counts = [0] * len(blocks)
            for y in g.neighbors(w):
                counts[owner[y]] += 1
            if row is None:
                row = counts
            elif counts != row:
                logger.debug("Partition not equitable", cell=idx, vertex=w)
                return None
        quotient.append(row or [0] * len(blocks))
    return quotient
