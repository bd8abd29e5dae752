"""Predistance and edge-predistance polynomials by Gram-Schmidt and by recurrence."""

from fractions import Fraction
from typing import Callable, List, Optional, Tuple, Union

import structlog

from ..algebra import RatPoly
from ..classify import EdgeIntersectionArray, IntersectionArray
from .inner_product import InnerProductSpace
from .models import MalformedArrayError, NormalizationError, PolyKind, PolySequence, PolySource

logger = structlog.get_logger(__name__)

InnerProduct = Callable[[RatPoly, RatPoly], Fraction]


def _orthogonal_residuals(inner: InnerProduct, limit: int, exact_count: bool) -> List[Tuple[RatPoly, Fraction]]:
    """Gram-Schmidt on 1, x, x^2, ... up to degree ``limit``.

    With ``exact_count`` every residual up to ``limit`` must have nonzero
    norm; otherwise the scan stops at the first residual of norm zero.
    """
    basis: List[Tuple[RatPoly, Fraction]] = []
    for k in range(limit + 1):
        monomial = RatPoly.monomial(k)
        residual = monomial
        for prev, norm in basis:
            residual = residual - prev * (inner(monomial, prev) / norm)
        norm = inner(residual, residual)
        if norm == 0:
            if exact_count:
                raise NormalizationError(f"Residual of degree {k} has zero norm below degree {limit}")
            break
        basis.append((residual, norm))
    return basis


def _normalize(basis: List[Tuple[RatPoly, Fraction]], delta: int) -> List[RatPoly]:
    polys = []
    for q, norm in basis:
        at_delta = q(delta)
        if at_delta == 0:
            raise NormalizationError(f"Residual {q.to_text()} vanishes at {delta}")
        polys.append(q * (at_delta / norm))
    return polys


def predistance_polys(sp: InnerProductSpace, delta: int) -> PolySequence:
    """p_0..p_d orthogonal under the trace product with ||p_i||^2 = p_i(delta)."""
    d = sp.spectral_degree
    basis = _orthogonal_residuals(sp.inner_product, d, exact_count=True)
    polys = _normalize(basis, delta)
    logger.debug("Predistance polynomials built", degree=d)
    return PolySequence(kind=PolyKind.VERTEX, source=PolySource.GRAM_SCHMIDT, polys=tuple(polys))


def edge_predistance_polys(sp: InnerProductSpace, delta: int) -> PolySequence:
    """p~_0..p~_d~ orthogonal under the edge product, ||p~_i||_E^2 = p~_i(delta)."""

    def inner(f: RatPoly, g: RatPoly) -> Fraction:
        return sp.edge_inner_product(f, g, delta)

    basis = _orthogonal_residuals(inner, sp.spectral_degree + 1, exact_count=False)
    polys = _normalize(basis, delta)
    logger.debug("Edge-predistance polynomials built", degree=len(polys) - 1)
    return PolySequence(kind=PolyKind.EDGE, source=PolySource.GRAM_SCHMIDT, polys=tuple(polys))


def polys_from_array(arr: Union[IntersectionArray, EdgeIntersectionArray]) -> PolySequence:
    """Solve x r_i = b_{i-1} r_{i-1} + a_i r_i + c_{i+1} r_{i+1} for r_{i+1}, starting at r_0 = 1."""
    kind = PolyKind.EDGE if isinstance(arr, EdgeIntersectionArray) else PolyKind.VERTEX
    x = RatPoly.x()
    polys = [RatPoly.constant(1)]
    previous: Optional[RatPoly] = None
    for i in range(arr.length):
        c_next = arr.c_at(i + 1)
        if c_next == 0:
            raise MalformedArrayError(f"c_{i + 1} = 0 in {arr.to_text()}")
        current = polys[-1]
        numerator = (x - arr.a_at(i)) * current
        if previous is not None:
            numerator = numerator - previous * arr.b_at(i - 1)
        previous = current
        polys.append(numerator / c_next)
    return PolySequence(kind=kind, source=PolySource.RECURRENCE, polys=tuple(polys))


def hoffman_poly(seq: PolySequence) -> RatPoly:
    """H = p_0 + ... + p_d."""
    return seq.partial_sum(seq.top)
