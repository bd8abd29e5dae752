"""Univariate polynomials with exact rational coefficients."""

from fractions import Fraction
from typing import Iterable, Optional, Tuple, Union

from .rational import RationalLike, as_rational, format_rational


class PolynomialError(ValueError):
    """Invalid polynomial construction or operation."""


Operand = Union["RatPoly", int, Fraction]


class RatPoly:
    """Dense polynomial, coefficients stored in ascending degree, trailing zeros trimmed.

    The zero polynomial has no coefficients and ``degree`` is ``None``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[RationalLike] = ()):
        coeffs = [as_rational(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def x(cls) -> "RatPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, value: RationalLike) -> "RatPoly":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coefficient: RationalLike = 1) -> "RatPoly":
        if degree < 0:
            raise PolynomialError(f"Monomial degree must be non-negative, got {degree}")
        return cls([0] * degree + [coefficient])

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> Optional[int]:
        return len(self._coeffs) - 1 if self._coeffs else None

    @property
    def leading_coefficient(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, k: int) -> Fraction:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Fraction(0)

    def __call__(self, value: RationalLike) -> Fraction:
        value = as_rational(value)
        result = Fraction(0)
        for c in reversed(self._coeffs):
            result = result * value + c
        return result

    # arithmetic

    @staticmethod
    def _lift(other: Operand) -> "RatPoly":
        if isinstance(other, RatPoly):
            return other
        return RatPoly.constant(other)

    def __add__(self, other: Operand) -> "RatPoly":
        other = self._lift(other)
        size = max(len(self._coeffs), len(other._coeffs))
        return RatPoly(self.coefficient(k) + other.coefficient(k) for k in range(size))

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self._coeffs)

    def __sub__(self, other: Operand) -> "RatPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other: Operand) -> "RatPoly":
        return self._lift(other) - self

    def __mul__(self, other: Operand) -> "RatPoly":
        if not isinstance(other, RatPoly):
            factor = as_rational(other)
            return RatPoly(c * factor for c in self._coeffs)
        if self.is_zero() or other.is_zero():
            return RatPoly()
        product = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                product[i + j] += a * b
        return RatPoly(product)

    __rmul__ = __mul__

    def __truediv__(self, divisor: RationalLike) -> "RatPoly":
        divisor = as_rational(divisor)
        if divisor == 0:
            raise PolynomialError("Division of a polynomial by zero")
        return RatPoly(c / divisor for c in self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._coeffs == RatPoly.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({self.to_text()})"

    def to_text(self) -> str:
        """Deterministic text form, ascending degree: ``(-3/2) + (1/2)*x^2``."""
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            coeff = format_rational(c)
            if c < 0 or c.denominator != 1:
                coeff = f"({coeff})"
            if k == 0:
                terms.append(coeff)
                continue
            power = "x" if k == 1 else f"x^{k}"
            terms.append(power if c == 1 else f"{coeff}*{power}")
        return " + ".join(terms)
