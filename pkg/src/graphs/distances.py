"""Breadth-first distances, edge distances and the dense matrix families built on them."""

from collections import deque
from typing import Iterable, List, Optional, Tuple

import numpy as np
import structlog
from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..algebra import RatMatrix
from .graph import Graph, GraphError

logger = structlog.get_logger(__name__)


class DisconnectedGraphError(GraphError):
    """Some vertex is unreachable from the BFS sources."""

    def __init__(self, vertex: int):
        super().__init__(f"Graph is disconnected: vertex {vertex} is unreachable")
        self.vertex = vertex


def bfs_from_set(g: Graph, sources: Iterable[int]) -> List[int]:
    """Distance from every vertex to the nearest source.

    Raises:
        DisconnectedGraphError: when a vertex cannot be reached.
    """
    dist = [-1] * g.n
    queue: deque = deque()
    for s in sources:
        if not 0 <= s < g.n:
            raise GraphError(f"Source {s} outside 0..{g.n - 1}")
        if dist[s] < 0:
            dist[s] = 0
            queue.append(s)
    if not queue:
        raise GraphError("BFS needs at least one source")

    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)

    for v, d in enumerate(dist):
        if d < 0:
            raise DisconnectedGraphError(v)
    return dist


class DistanceData(BaseModel):
    """All-pairs distances and per-edge eccentricities of a connected graph."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dist: np.ndarray = Field(..., description="n x n matrix of path distances")
    diameter: int = Field(..., ge=0)
    edge_eccentricity: Tuple[int, ...] = Field(..., description="max over w of dist(w, e), per edge id")
    edge_diameter: int = Field(..., ge=0)

    @field_validator("dist")
    @classmethod
    def validate_dist(cls, v: np.ndarray) -> np.ndarray:
        if v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise ValueError(f"Distance matrix must be square, got shape {v.shape}")
        v = np.array(v, dtype=np.int64)
        v.flags.writeable = False
        return v

    def distance(self, u: int, v: int) -> int:
        return int(self.dist[u, v])

    def sphere(self, u: int, i: int) -> List[int]:
        """Vertices at distance exactly ``i`` from ``u``."""
        return [int(w) for w in np.flatnonzero(self.dist[u] == i)]

    def edge_distances(self, u: int, v: int) -> np.ndarray:
        """``min(dist(w, u), dist(w, v))`` for every vertex ``w``."""
        return np.minimum(self.dist[u], self.dist[v])


def compute_distance_data(g: Graph) -> DistanceData:
    """Run BFS from every vertex; the graph must be connected."""
    if g.n == 0:
        raise GraphError("Empty graph has no distances")
    dist = np.array([bfs_from_set(g, [u]) for u in range(g.n)], dtype=np.int64)
    ecc = tuple(int(np.minimum(dist[u], dist[v]).max()) for u, v in g.edges)
    dd = DistanceData(
        dist=dist,
        diameter=int(dist.max()),
        edge_eccentricity=ecc,
        edge_diameter=max(ecc) if ecc else 0,
    )
    logger.debug("Distances computed", n=g.n, m=g.m, diameter=dd.diameter, edge_diameter=dd.edge_diameter)
    return dd


def distance_matrix_family(g: Graph, dd: Optional[DistanceData] = None) -> List[RatMatrix]:
    """Distance-i matrices A_0 = I, A_1 = A, ..., A_D."""
    dd = dd or compute_distance_data(g)
    return [RatMatrix((dd.dist == i).astype(np.int64)) for i in range(dd.diameter + 1)]


def edge_distance_table(g: Graph, dd: DistanceData) -> np.ndarray:
    """n x m table of vertex-to-edge distances, columns in edge-id order."""
    if not g.edges:
        return np.zeros((g.n, 0), dtype=np.int64)
    return np.stack([dd.edge_distances(u, v) for u, v in g.edges], axis=1)


def incidence_matrix_family(g: Graph, dd: Optional[DistanceData] = None) -> List[RatMatrix]:
    """Vertex-edge distance matrices B_0, ..., B_{D~}; B_0 is the incidence matrix."""
    dd = dd or compute_distance_data(g)
    table = edge_distance_table(g, dd)
    return [RatMatrix((table == i).astype(np.int64)) for i in range(dd.edge_diameter + 1)]
