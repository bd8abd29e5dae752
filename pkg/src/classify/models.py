"""Intersection arrays, verdicts with witnesses and the classification report."""

import re
from enum import Enum
from typing import Dict, List, Optional, Tuple

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..partitions import CellLabel


class ConsistencyError(RuntimeError):
    """Two criteria that must agree on the same graph disagree."""


_ARRAY_RE = re.compile(r"^\{\s*([0-9,\s]*);\s*([0-9,\s]*)\}$")


def _parse_int_list(text: str) -> Tuple[int, ...]:
    text = text.strip()
    return tuple(int(part) for part in text.split(",")) if text else ()


class _ArrayBase(BaseModel):
    """Shared shape of {b_0,...,b_{k-1}; c_1,...,c_k} with a fixed valency."""

    model_config = ConfigDict(frozen=True)

    degree: int = Field(..., ge=1, description="Valency of the graph")
    b: Tuple[int, ...] = Field(..., description="b_0 .. b_{k-1}")
    c: Tuple[int, ...] = Field(..., description="c_1 .. c_k")

    @field_validator("b", "c")
    @classmethod
    def validate_non_negative(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(x < 0 for x in v):
            raise ValueError(f"Intersection numbers must be non-negative, got {v}")
        return v

    @model_validator(mode="after")
    def validate_shape(self) -> "_ArrayBase":
        if len(self.b) != len(self.c):
            raise ValueError(f"Need as many b's as c's, got {len(self.b)} and {len(self.c)}")
        for i in range(len(self.b) + 1):
            if self.a_at(i) < 0:
                raise ValueError(f"a_{i} = {self.a_at(i)} is negative")
        return self

    @property
    def length(self) -> int:
        return len(self.b)

    def b_at(self, i: int) -> int:
        return self.b[i] if 0 <= i < len(self.b) else 0

    def c_at(self, i: int) -> int:
        return self.c[i - 1] if 1 <= i <= len(self.c) else 0

    def a_at(self, i: int) -> int:
        return self.degree - self.b_at(i) - self.c_at(i)

    @property
    def a(self) -> Tuple[int, ...]:
        return tuple(self.a_at(i) for i in range(len(self.b) + 1))

    def to_text(self) -> str:
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"

    @classmethod
    def _split(cls, text: str) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        match = _ARRAY_RE.match(text.strip())
        if not match:
            raise ValueError(f"Not an intersection array: {text!r}")
        return _parse_int_list(match.group(1)), _parse_int_list(match.group(2))


class IntersectionArray(_ArrayBase):
    """{b_0,...,b_{d-1}; c_1,...,c_d} of a distance-regular graph."""

    @model_validator(mode="after")
    def validate_vertex_array(self) -> "IntersectionArray":
        if self.b and self.b[0] != self.degree:
            raise ValueError(f"b_0 must equal the valency {self.degree}, got {self.b[0]}")
        if self.c and self.c[0] != 1:
            raise ValueError(f"c_1 must be 1, got {self.c[0]}")
        return self

    @property
    def diameter(self) -> int:
        return self.length

    @classmethod
    def parse(cls, text: str) -> "IntersectionArray":
        b, c = cls._split(text)
        if not b:
            raise ValueError("A vertex intersection array needs b_0")
        return cls(degree=b[0], b=b, c=c)


class EdgeIntersectionArray(_ArrayBase):
    """{b~_0,...,b~_{d~-1}; c~_1,...,c~_{d~}} of an edge-distance-regular graph."""

    @model_validator(mode="after")
    def validate_edge_array(self) -> "EdgeIntersectionArray":
        if self.a_at(0) != 1:
            raise ValueError(f"a~_0 must be 1, got {self.a_at(0)}")
        return self

    @property
    def edge_diameter(self) -> int:
        return self.length

    @classmethod
    def parse(cls, text: str, degree: Optional[int] = None) -> "EdgeIntersectionArray":
        b, c = cls._split(text)
        if degree is None:
            if not b:
                raise ValueError("Valency must be given for an empty edge array")
            degree = b[0] + 1
        return cls(degree=degree, b=b, c=c)


class WitnessKind(str, Enum):
    DISTANCE_REGULAR = "distance-regular"
    EDGE_DISTANCE_REGULAR = "edge-distance-regular"
    HOMOGENEOUS = "homogeneous"


class Witness(BaseModel):
    """First conflict found by an exhaustive scan."""

    model_config = ConfigDict(frozen=True)

    kind: WitnessKind
    stratum: Optional[int] = None
    first: Tuple[int, ...] = Field(..., description="Vertices of the first occurrence")
    second: Tuple[int, ...] = Field(..., description="Vertices of the conflicting occurrence")
    first_counts: Tuple[int, ...] = ()
    second_counts: Tuple[int, ...] = ()
    detail: str = ""


class HomogeneousQuotient(BaseModel):
    """Labelled quotient matrix of an equitable pair partition."""

    model_config = ConfigDict(frozen=True)

    labels: Tuple[CellLabel, ...]
    sizes: Tuple[int, ...]
    matrix: Tuple[Tuple[int, ...], ...]

    def to_frame(self) -> pd.DataFrame:
        names = [f"V{i},{j}" for i, j in self.labels]
        frame = pd.DataFrame(list(self.matrix), index=names, columns=names)
        frame.insert(0, "size", list(self.sizes))
        return frame


class DistanceRegularVerdict(BaseModel):
    array: Optional[IntersectionArray] = None
    witness: Optional[Witness] = None


class EdgeDistanceRegularVerdict(BaseModel):
    array: Optional[EdgeIntersectionArray] = None
    witness: Optional[Witness] = None


class HomogeneityVerdict(BaseModel):
    quotient: Optional[HomogeneousQuotient] = None
    witness: Optional[Witness] = None


class TripleIntersection(BaseModel):
    """|G_i(u) n G_j(v)| over pairs at distance k; ``value`` is set when it is constant."""

    i: int
    j: int
    k: int
    value: Optional[int] = None
    table: Dict[Tuple[int, int], int] = Field(default_factory=dict)


class ClassificationReport(BaseModel):
    """Everything the classifiers decide about one connected graph."""

    n: int
    m: int
    degree: Optional[int] = None
    bipartite: bool
    odd_girth: Optional[int] = None
    diameter: int
    edge_diameter: int
    spectral_diameter: int = Field(..., description="Degree of the minimal polynomial of A, minus one")
    distance_regular: Optional[IntersectionArray] = None
    distance_regular_witness: Optional[Witness] = None
    edge_distance_regular: Optional[EdgeIntersectionArray] = None
    edge_distance_regular_witness: Optional[Witness] = None
    homogeneous: Optional[HomogeneousQuotient] = None
    homogeneity_witness: Optional[Witness] = None
    generalized_odd: bool = False
    sphere_sizes: Optional[Tuple[int, ...]] = None
    notes: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_generalized_odd(self) -> "ClassificationReport":
        if self.generalized_odd:
            if self.distance_regular is None or self.bipartite:
                raise ValueError("A generalized odd graph must be distance-regular and nonbipartite")
            if self.odd_girth != 2 * self.diameter + 1:
                raise ValueError(
                    f"Generalized odd graph with diameter {self.diameter} needs odd girth "
                    f"{2 * self.diameter + 1}, got {self.odd_girth}"
                )
        return self

    @property
    def vacuous_edge_regularity(self) -> bool:
        """Single-edge graph: one edge layer, edge-distance-regular by convention."""
        return self.edge_distance_regular is not None and self.edge_diameter == 0
