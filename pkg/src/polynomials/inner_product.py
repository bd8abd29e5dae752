"""Trace scalar products on polynomials in the adjacency matrix."""

from fractions import Fraction
from typing import Dict, List, Optional

import numpy as np
import structlog

from ..algebra import RatMatrix, RatPoly, min_poly_degree
from ..graphs import Graph

logger = structlog.get_logger(__name__)


class InnerProductSpace:
    """<f, g> = tr(f(A) g(A)) / n, evaluated through moments tr(A^k) / n.

    Powers of A are kept as exact integer object arrays; a moment of order k
    is read off as the entrywise product of A^floor(k/2) and A^ceil(k/2),
    which only needs powers up to about half the order.
    """

    def __init__(self, adjacency: RatMatrix):
        if not adjacency.is_symmetric():
            raise ValueError("Adjacency matrix must be square and symmetric")
        if not adjacency.is_integral():
            raise ValueError("Adjacency matrix must have integer entries")
        self.adjacency = adjacency
        self.n = adjacency.shape[0]
        self._powers: List[np.ndarray] = [RatMatrix.identity(self.n).data]
        self._moments: Dict[int, Fraction] = {}
        self._spectral_degree: Optional[int] = None

    @classmethod
    def from_graph(cls, g: Graph) -> "InnerProductSpace":
        return cls(g.adjacency_matrix())

    @property
    def spectral_degree(self) -> int:
        """d = degree of the minimal polynomial of A minus one."""
        if self._spectral_degree is None:
            self._spectral_degree = min_poly_degree(self.adjacency) - 1
        return self._spectral_degree

    def power(self, k: int) -> np.ndarray:
        while len(self._powers) <= k:
            self._powers.append(self._powers[-1] @ self.adjacency.data)
        return self._powers[k]

    def moment(self, k: int) -> Fraction:
        """tr(A^k) / n."""
        if k not in self._moments:
            low = k // 2
            trace = np.sum(self.power(low) * self.power(k - low))
            self._moments[k] = Fraction(int(trace), self.n)
        return self._moments[k]

    def inner_product(self, f: RatPoly, g: RatPoly) -> Fraction:
        total = Fraction(0)
        for i, fi in enumerate(f.coefficients):
            if fi == 0:
                continue
            for j, gj in enumerate(g.coefficients):
                if gj:
                    total += fi * gj * self.moment(i + j)
        return total

    def edge_inner_product(self, f: RatPoly, g: RatPoly, delta: int) -> Fraction:
        """(1/2m) tr(B_0^T f(A) g(A) B_0) = <f, (x + delta) g> / delta on a delta-regular graph."""
        shifted = (RatPoly.x() + delta) * g
        return self.inner_product(f, shifted) / delta


def inner_product(sp: InnerProductSpace, f: RatPoly, g: RatPoly) -> Fraction:
    return sp.inner_product(f, g)


def edge_inner_product(sp: InnerProductSpace, f: RatPoly, g: RatPoly, delta: int) -> Fraction:
    return sp.edge_inner_product(f, g, delta)
