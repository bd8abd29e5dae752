"""Fraction-free (Bareiss) elimination over the integers."""

from fractions import Fraction
from math import lcm
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
import structlog

from .matrix import NonSquareMatrixError, RatMatrix

logger = structlog.get_logger(__name__)


class FractionFreeEchelon:
    """Incrementally built echelon basis of integer rows.

    Every stored row was reduced against all earlier pivots, so each entry
    is a minor of the inserted rows and the division by the previous pivot
    is exact.
    """

    def __init__(self) -> None:
        self._pivots: List[Tuple[int, List[int]]] = []

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def insert(self, row: Sequence[int]) -> bool:
        """Reduce ``row`` against the basis; keep it and return True when independent."""
        reduced = [int(x) for x in row]
        previous = 1
        for col, pivot_row in self._pivots:
            pivot = pivot_row[col]
            factor = reduced[col]
            reduced = [(pivot * x - factor * y) // previous for x, y in zip(reduced, pivot_row)]
            previous = pivot
        lead = next((c for c, x in enumerate(reduced) if x != 0), None)
        if lead is None:
            return False
        self._pivots.append((lead, reduced))
        return True


def integer_rank(rows: Iterable[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix given row by row."""
    echelon = FractionFreeEchelon()
    width: Optional[int] = None
    for row in rows:
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ValueError(f"Ragged matrix: row of length {len(row)}, expected {width}")
        echelon.insert(row)
    return echelon.rank


def _integer_row(entries: np.ndarray) -> List[int]:
    flat = [Fraction(v) for v in entries.flat]
    common = lcm(*(v.denominator for v in flat)) if flat else 1
    return [v.numerator * (common // v.denominator) for v in flat]


def min_poly_degree(a: RatMatrix) -> int:
    """Degree of the minimal polynomial: least k with A^k in span{I, ..., A^(k-1)}."""
    if not a.is_square():
        raise NonSquareMatrixError(f"Minimal polynomial needs a square matrix, got {a.shape}")
    n = a.shape[0]
    echelon = FractionFreeEchelon()
    power = RatMatrix.identity(n).data
    for k in range(n + 1):
        if not echelon.insert(_integer_row(power)):
            logger.debug("Minimal polynomial degree found", degree=k, order=n)
            return k
        power = power @ a.data
    raise RuntimeError(f"Powers of a {n}x{n} matrix stayed independent past degree {n}")
