"""
Graph Families

Registry of parametrised graph constructions with frozen vertex numbering:

- complete:n, path:n, cycle:n
- complete_bipartite:a,b (left side 0..a-1)
- hypercube:k (vertex = integer with binary coordinates)
- kneser:n,k (k-subsets of 0..n-1 in colex order)
- odd:k (kneser:2k-1,k-1)
- hamming:d,q (tuples over 0..q-1 in lexicographic order)
- petersen, cube (aliases)
"""

from itertools import combinations, product
from typing import Callable, Dict, List, Tuple

import structlog
from pydantic import BaseModel, Field, field_validator

from ..graphs import Graph

logger = structlog.get_logger(__name__)


class FamilyError(ValueError):
    """Unknown family or parameters outside the family's domain."""


class FamilySpec(BaseModel):
    """A family name with its integer parameters, e.g. ``kneser:5,2``."""

    name: str = Field(..., description="Registered family name")
    params: Tuple[int, ...] = Field(default=(), description="Integer parameters")

    @field_validator("name")
    @classmethod
    def validate_name(cls, v: str) -> str:
        v = v.strip().lower()
        if v not in FAMILIES:
            raise ValueError(f"Unknown family {v!r}; choose from {', '.join(sorted(FAMILIES))}")
        return v

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        name, _, raw = text.partition(":")
        try:
            params = tuple(int(p) for p in raw.split(",")) if raw.strip() else ()
        except ValueError:
            raise FamilyError(f"Family parameters must be integers: {text!r}") from None
        try:
            return cls(name=name, params=params)
        except ValueError as e:
            raise FamilyError(str(e)) from None

    def to_text(self) -> str:
        return self.name + (":" + ",".join(map(str, self.params)) if self.params else "")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise FamilyError(message)


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    _require(a >= 1 and b >= 1, f"complete_bipartite needs a, b >= 1, got {a}, {b}")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def hypercube(k: int) -> Graph:
    _require(k >= 1, f"hypercube needs k >= 1, got {k}")
    n = 1 << k
    return Graph.from_edges(n, ((v, v ^ (1 << i)) for v in range(n) for i in range(k) if v < v ^ (1 << i)))


def kneser(n: int, k: int) -> Graph:
    _require(k >= 1 and n >= 2 * k, f"kneser needs k >= 1 and n >= 2k, got n={n}, k={k}")
    subsets: List[Tuple[int, ...]] = sorted(combinations(range(n), k), key=lambda s: s[::-1])
    sets = [frozenset(s) for s in subsets]
    edges = [(i, j) for i, j in combinations(range(len(sets)), 2) if not sets[i] & sets[j]]
    return Graph.from_edges(len(sets), edges)


def odd_graph(k: int) -> Graph:
    _require(k >= 2, f"odd needs k >= 2, got {k}")
    return kneser(2 * k - 1, k - 1)


def hamming(d: int, q: int) -> Graph:
    _require(d >= 1 and q >= 2, f"hamming needs d >= 1 and q >= 2, got d={d}, q={q}")
    words = list(product(range(q), repeat=d))
    edges = [
        (i, j)
        for i, j in combinations(range(len(words)), 2)
        if sum(x != y for x, y in zip(words[i], words[j])) == 1
    ]
    return Graph.from_edges(len(words), edges)


FAMILIES: Dict[str, Tuple[int, Callable[..., Graph]]] = {
    "complete": (1, complete),
    "path": (1, path),
    "cycle": (1, cycle),
    "complete_bipartite": (2, complete_bipartite),
    "hypercube": (1, hypercube),
    "kneser": (2, kneser),
    "odd": (1, odd_graph),
    "hamming": (2, hamming),
    "petersen": (0, lambda: kneser(5, 2)),
    "cube": (0, lambda: hypercube(3)),
}


def generate(spec: FamilySpec) -> Graph:
    """Build the graph named by ``spec``."""
    arity, builder = FAMILIES[spec.name]
    if len(spec.params) != arity:
        raise FamilyError(f"{spec.name} takes {arity} parameter(s), got {len(spec.params)}")
    g = builder(*spec.params)
    logger.debug("Family generated", family=spec.to_text(), n=g.n, m=g.m)
    return g
