"""Exact rational scalars.

``fractions.Fraction`` already keeps numerator and denominator in lowest
terms with a positive denominator, so it is used directly as the scalar type.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction

RationalLike = Union[int, Fraction]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an integer or fraction to a ``Fraction``; floats are refused."""
    if isinstance(value, bool) or not isinstance(value, _RationalABC):
        raise TypeError(f"Expected an exact rational, got {type(value).__name__}")
    return Fraction(value)


def format_rational(value: RationalLike) -> str:
    """Canonical text form: ``p`` when the denominator is one, else ``p/q``."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        if int(den) <= 0:
            raise ValueError(f"Invalid rational denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))
