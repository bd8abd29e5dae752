"""Regularity, bipartiteness and odd girth."""

from collections import deque
from typing import FrozenSet, Optional, Tuple

import structlog

from .distances import bfs_from_set
from .graph import Graph, GraphError

logger = structlog.get_logger(__name__)


class AnalysisError(GraphError):
    """The graph is outside the range the dense analysis accepts."""


def is_regular(g: Graph) -> Optional[int]:
    """Common valency, or None when degrees differ."""
    if g.n == 0:
        return None
    degrees = {g.degree(v) for v in range(g.n)}
    return degrees.pop() if len(degrees) == 1 else None


def bipartition(g: Graph) -> Optional[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """Two colour classes of a proper 2-colouring, or None when one does not exist."""
    colour = [-1] * g.n
    for start in range(g.n):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return None
    left = frozenset(v for v in range(g.n) if colour[v] == 0)
    right = frozenset(v for v in range(g.n) if colour[v] == 1)
    return left, right


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def odd_girth(g: Graph) -> Optional[int]:
    """Length of a shortest odd cycle, None for bipartite graphs.

    An edge inside BFS layer i of some root closes an odd walk of length
    2i + 1; the minimum over roots and such edges is the odd girth.
    """
    best: Optional[int] = None
    for root in range(g.n):
        dist = bfs_from_set(g, [root])
        for u, v in g.edges:
            if dist[u] == dist[v]:
                length = 2 * dist[u] + 1
                if best is None or length < best:
                    best = length
    return best


def require_analysable(g: Graph, max_vertices: int) -> None:
    """Entry guard for the dense pipeline: at least two vertices, connected, not too large."""
    if g.n < 2:
        raise AnalysisError(f"Analysis needs at least 2 vertices, got {g.n}")
    if g.n > max_vertices:
        raise AnalysisError(f"Graph has {g.n} vertices, above the dense limit of {max_vertices}")
    bfs_from_set(g, [0])
