"""Immutable simple undirected graph on vertices ``0..n-1``."""

from typing import Dict, FrozenSet, Iterable, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator

from ..algebra import RatMatrix

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Malformed graph: loop, repeated edge or vertex id out of range."""


class Graph(BaseModel):
    """Simple undirected graph; edges are stored as sorted ``(u, v)`` pairs with ``u < v``."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="Number of vertices")
    edges: Tuple[Edge, ...] = Field(default=(), description="Canonical edge list, lexicographically sorted")

    _neighbors: Tuple[Tuple[int, ...], ...] = PrivateAttr(default=())
    _neighbor_sets: Tuple[FrozenSet[int], ...] = PrivateAttr(default=())
    _edge_index: Dict[Edge, int] = PrivateAttr(default_factory=dict)

    @field_validator("edges")
    @classmethod
    def validate_canonical(cls, v: Tuple[Edge, ...]) -> Tuple[Edge, ...]:
        for u, w in v:
            if u >= w:
                raise ValueError(f"Edge ({u}, {w}) is not in canonical u < v form")
        if list(v) != sorted(set(v)):
            raise ValueError("Edges must be sorted and free of repeats")
        return v

    @model_validator(mode="after")
    def validate_vertex_ids(self) -> "Graph":
        for u, w in self.edges:
            if u < 0 or w >= self.n:
                raise ValueError(f"Edge ({u}, {w}) has an endpoint outside 0..{self.n - 1}")
        return self

    def model_post_init(self, __context: object) -> None:
        adjacency: List[List[int]] = [[] for _ in range(self.n)]
        for u, w in self.edges:
            adjacency[u].append(w)
            adjacency[w].append(u)
        self._neighbors = tuple(tuple(sorted(row)) for row in adjacency)
        self._neighbor_sets = tuple(frozenset(row) for row in adjacency)
        self._edge_index = {edge: idx for idx, edge in enumerate(self.edges)}

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph from edges in any order or orientation."""
        if n < 0:
            raise GraphError(f"Vertex count must be non-negative, got {n}")
        seen = set()
        for u, w in edges:
            if u == w:
                raise GraphError(f"Self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= w < n):
                raise GraphError(f"Edge ({u}, {w}) has an endpoint outside 0..{n - 1}")
            key = (min(u, w), max(u, w))
            if key in seen:
                raise GraphError(f"Repeated edge {key}")
            seen.add(key)
        return cls(n=n, edges=tuple(sorted(seen)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._neighbors[v]

    def neighbor_set(self, v: int) -> FrozenSet[int]:
        return self._neighbor_sets[v]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    def edge_id(self, u: int, v: int) -> int:
        """Index of edge ``{u, v}`` in :attr:`edges`."""
        try:
            return self._edge_index[(min(u, v), max(u, v))]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not an edge") from None

    def ordered_edges(self) -> List[Edge]:
        """Both orientations of every edge."""
        return [e for u, w in self.edges for e in ((u, w), (w, u))]

    def adjacency_array(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, w in self.edges:
            a[u, w] = a[w, u] = 1
        return a

    def adjacency_matrix(self) -> RatMatrix:
        return RatMatrix(self.adjacency_array())
