"""Data models for vertex-pair and edge distance partitions."""

from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

CellLabel = Tuple[int, int]


class PartitionError(ValueError):
    """Invalid base pair or input that is not a vertex partition."""


class _Counts(BaseModel):
    model_config = ConfigDict(frozen=True)

    i: int = Field(..., ge=0, description="Stratum index")
    c: int = Field(..., ge=0, description="Neighbours one stratum closer")
    a: int = Field(..., ge=0, description="Neighbours in the same stratum")
    b: int = Field(..., ge=0, description="Neighbours one stratum further")

    @property
    def total(self) -> int:
        return self.c + self.a + self.b

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.c, self.a, self.b)


class LocalCounts(_Counts):
    """c_i(w,u), a_i(w,u), b_i(w,u) with i = dist(w,u)."""


class EdgeLocalCounts(_Counts):
    """c~_i(w,e), a~_i(w,e), b~_i(w,e) with i = dist(w,e)."""


class PairPartition(BaseModel):
    """Nonempty cells V_{i,j}(u,v) of an adjacent pair; only |i-j| <= 1 occurs."""

    model_config = ConfigDict(frozen=True)

    u: int
    v: int
    cells: Dict[CellLabel, FrozenSet[int]] = Field(..., description="Nonempty cells keyed by (i, j)")

    @model_validator(mode="after")
    def validate_cells(self) -> "PairPartition":
        for (i, j), cell in self.cells.items():
            if abs(i - j) > 1:
                raise ValueError(f"Cell V_({i},{j}) cannot occur for adjacent vertices")
            if not cell:
                raise ValueError(f"Cell V_({i},{j}) is stored but empty")
        return self

    @property
    def labels(self) -> List[CellLabel]:
        return sorted(self.cells)

    def cell(self, i: int, j: int) -> FrozenSet[int]:
        return self.cells.get((i, j), frozenset())

    def is_empty(self, i: int, j: int) -> bool:
        return (i, j) not in self.cells

    def sizes(self) -> Dict[CellLabel, int]:
        return {label: len(cell) for label, cell in sorted(self.cells.items())}


class EdgePartition(BaseModel):
    """Layers V~_0..V~_k of an edge, V~_i = V_{i,i} u V_{i,i+1} u V_{i+1,i}."""

    model_config = ConfigDict(frozen=True)

    u: int
    v: int
    layers: Tuple[FrozenSet[int], ...]

    @property
    def eccentricity(self) -> int:
        return len(self.layers) - 1

    def layer_of(self, w: int) -> Optional[int]:
        for i, layer in enumerate(self.layers):
            if w in layer:
                return i
        return None


class ProofFact(str, Enum):
    """Pointwise neighbour-count identities around an edge.

    FORWARD         w in V_{i,i-1}: |G(w) n V~_i| = b_i(w,u) + |G(w) n V_{i,i}|
    BACKWARD        w in V_{i,i+1}: |G(w) n V~_{i-1}| = c_i(w,u)
    BACKWARD_LEVEL  w in V_{i,i+1}, a_i = 0: |G(w) n V~_{i-1}| + |G(w) n V~_i| = c_{i+1}(w,v)
    DIAGONAL        w in V_{i,i}: |G(w) n V~_{i-1}| = c_i(w,u) + c_i(w,v) - |G(w) n V_{i-1,i-1}|
    """

    FORWARD = "forward"
    BACKWARD = "backward"
    BACKWARD_LEVEL = "backward-level"
    DIAGONAL = "diagonal"


class ProofFactRecord(BaseModel):
    """Both sides of one identity, counted independently from neighbour sets."""

    model_config = ConfigDict(frozen=True)

    fact: ProofFact
    u: int
    v: int
    w: int
    cell: CellLabel
    lhs: Optional[int] = None
    rhs: Optional[int] = None
    skipped: Optional[str] = Field(None, description="Reason the identity was not applicable")

    @property
    def holds(self) -> bool:
        return self.skipped is not None or self.lhs == self.rhs
