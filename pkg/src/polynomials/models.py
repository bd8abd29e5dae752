"""Polynomial sequences and per-identity check records."""

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..algebra import RatPoly


class NormalizationError(RuntimeError):
    """An orthogonal residual cannot be normalized (vanishes at the valency)."""


class MalformedArrayError(ValueError):
    """An intersection array cannot drive the three-term recurrence."""


class RecurrenceError(ValueError):
    """Reconstruction formula called outside its range."""


class PolyKind(str, Enum):
    VERTEX = "vertex"
    EDGE = "edge"


class PolySource(str, Enum):
    GRAM_SCHMIDT = "gram-schmidt"
    RECURRENCE = "recurrence"


class PolySequence(BaseModel):
    """p_0..p_d (vertex) or p~_0..p~_d~ (edge), deg p_i = i."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: PolyKind
    source: PolySource
    polys: Tuple[RatPoly, ...] = Field(..., min_length=1)

    @field_validator("polys")
    @classmethod
    def validate_degrees(cls, v: Tuple[RatPoly, ...]) -> Tuple[RatPoly, ...]:
        for i, p in enumerate(v):
            if p.degree != i:
                raise ValueError(f"Member {i} has degree {p.degree}")
        return v

    @property
    def top(self) -> int:
        """Index of the last member (d or d~)."""
        return len(self.polys) - 1

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, i: int) -> RatPoly:
        return self.polys[i]

    def partial_sum(self, i: int) -> RatPoly:
        """q_i = p_0 + ... + p_i; q_{-1} = 0."""
        total = RatPoly()
        for p in self.polys[: i + 1] if i >= 0 else ():
            total = total + p
        return total

    def same_polys(self, other: "PolySequence") -> bool:
        return self.polys == other.polys

    def to_text(self) -> List[str]:
        return [p.to_text() for p in self.polys]


class CheckRecord(BaseModel):
    """Outcome of one exact identity check."""

    model_config = ConfigDict(frozen=True)

    name: str
    index: Optional[int] = None
    passed: bool = False
    skipped: Optional[str] = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.skipped is not None or self.passed
