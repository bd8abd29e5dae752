"""Dense exact rational matrices backed by numpy object arrays."""

from fractions import Fraction
from math import lcm
from typing import Any, Iterable, List, Sequence, Tuple, Union

import numpy as np

from .polynomial import RatPoly
from .rational import RationalLike, as_rational


class DimensionMismatchError(ValueError):
    """Operand shapes are incompatible."""


class NonSquareMatrixError(ValueError):
    """A square matrix was required."""


def _coerce(value: Any) -> Union[int, Fraction]:
    # ints stay ints so integral products never touch Fraction arithmetic
    if isinstance(value, (bool, np.bool_)):
        return int(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"Matrix entries must be exact rationals, got {type(value).__name__}")


_coerce_all = np.frompyfunc(_coerce, 1, 1)


class RatMatrix:
    """Immutable r x c matrix of exact rationals."""

    __slots__ = ("_data",)

    def __init__(self, entries: Union[np.ndarray, Sequence[Sequence[RationalLike]]]):
        raw = np.asarray(entries, dtype=object) if not isinstance(entries, np.ndarray) else entries
        if raw.ndim != 2:
            raise DimensionMismatchError(f"Expected a 2-D array, got {raw.ndim} dimensions")
        data = np.empty(raw.shape, dtype=object)
        if raw.size:
            data[...] = _coerce_all(raw)
        data.flags.writeable = False
        self._data = data

    # construction helpers

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def ones(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(np.ones((rows, cols), dtype=np.int64))

    # accessors

    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape  # type: ignore[return-value]

    @property
    def data(self) -> np.ndarray:
        """Read-only object array of ``int``/``Fraction`` entries."""
        return self._data

    @property
    def T(self) -> "RatMatrix":
        return RatMatrix(self._data.T)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        return Fraction(self._data[index])

    def rows(self) -> List[List[Fraction]]:
        return [[Fraction(v) for v in row] for row in self._data]

    def is_square(self) -> bool:
        rows, cols = self.shape
        return rows == cols

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in self._data.flat)

    def trace(self) -> Fraction:
        self._require_square("trace")
        return Fraction(sum(self._data.diagonal(), 0))

    # arithmetic

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._require_same_shape(other, "+")
        return RatMatrix(self._data + other._data)

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._require_same_shape(other, "-")
        return RatMatrix(self._data - other._data)

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(-self._data)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape[1] != other.shape[0]:
            raise DimensionMismatchError(f"Cannot multiply {self.shape} by {other.shape}")
        if self.shape[1] == 0:
            return RatMatrix.zeros(self.shape[0], other.shape[1])
        return RatMatrix(self._data @ other._data)

    def scale(self, factor: RationalLike) -> "RatMatrix":
        factor = as_rational(factor)
        return RatMatrix(self._data * factor)

    def __mul__(self, factor: RationalLike) -> "RatMatrix":
        return self.scale(factor)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return bool(np.all(self._data == other._data))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"RatMatrix(shape={self.shape})"

    def _require_square(self, op: str) -> None:
        if not self.is_square():
            raise NonSquareMatrixError(f"{op} needs a square matrix, got {self.shape}")

    def _require_same_shape(self, other: "RatMatrix", op: str) -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Cannot apply {op} to {self.shape} and {other.shape}")


def sum_matrices(matrices: Iterable[RatMatrix], rows: int, cols: int) -> RatMatrix:
    total = RatMatrix.zeros(rows, cols)
    for m in matrices:
        total = total + m
    return total


def eval_poly_at_matrix(p: RatPoly, a: RatMatrix) -> RatMatrix:
    """Evaluate ``p(a)`` by Horner's rule on the denominator-cleared polynomial."""
    if not a.is_square():
        raise NonSquareMatrixError(f"Cannot evaluate a polynomial at a {a.shape} matrix")
    n = a.shape[0]
    if p.is_zero():
        return RatMatrix.zeros(n, n)

    common = lcm(*(c.denominator for c in p.coefficients))
    scaled = [c.numerator * (common // c.denominator) for c in p.coefficients]

    result = np.zeros((n, n), dtype=object)
    diagonal = np.diag_indices(n)
    for coeff in reversed(scaled):
        result = result @ a.data
        result[diagonal] += coeff
    if common != 1:
        result = _coerce_all(result / Fraction(common))
    return RatMatrix(result)


def mat_mul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    return a @ b


def trace(a: RatMatrix) -> Fraction:
    return a.trace()
