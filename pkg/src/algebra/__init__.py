"""Exact rational algebra: scalars, dense matrices, polynomials, rank."""

from .rational import Rational, as_rational, format_rational, parse_rational
from .matrix import (
    DimensionMismatchError,
    NonSquareMatrixError,
    RatMatrix,
    eval_poly_at_matrix,
    mat_mul,
    sum_matrices,
    trace,
)
from .polynomial import PolynomialError, RatPoly
from .elimination import FractionFreeEchelon, integer_rank, min_poly_degree

__all__ = [
    "Rational",
    "as_rational",
    "format_rational",
    "parse_rational",
    "RatMatrix",
    "DimensionMismatchError",
    "NonSquareMatrixError",
    "eval_poly_at_matrix",
    "mat_mul",
    "trace",
    "sum_matrices",
    "RatPoly",
    "PolynomialError",
    "FractionFreeEchelon",
    "integer_rank",
    "min_poly_degree",
]
