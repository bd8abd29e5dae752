"""Tests for exact rational scalars, matrices, polynomials and elimination."""

from fractions import Fraction

import numpy as np
import pytest

from src.algebra import (
    DimensionMismatchError,
    FractionFreeEchelon,
    NonSquareMatrixError,
    PolynomialError,
    RatMatrix,
    RatPoly,
    as_rational,
    eval_poly_at_matrix,
    format_rational,
    integer_rank,
    mat_mul,
    min_poly_degree,
    parse_rational,
    sum_matrices,
    trace,
)
from src.families import complete, cycle, hypercube
from src.graphs import distance_matrix_family


class TestRational:
    """Test canonical rational formatting."""

    def test_format_reduces_and_drops_unit_denominator(self):
        """Test lowest terms and bare integers."""
        assert format_rational(Fraction(-3, 6)) == "-1/2"
        assert format_rational(Fraction(8, 2)) == "4"
        assert format_rational(0) == "0"

    def test_parse_inverts_format(self):
        """Test that parsing the canonical form gives the value back."""
        for value in (Fraction(7, 3), Fraction(-1, 2), Fraction(5)):
            assert parse_rational(format_rational(value)) == value

    def test_parse_rejects_zero_denominator(self):
        """Test invalid denominators."""
        with pytest.raises(ValueError):
            parse_rational("1/0")

    def test_floats_and_bools_refused(self):
        """Test that inexact scalars never enter the algebra."""
        with pytest.raises(TypeError):
            as_rational(0.5)
        with pytest.raises(TypeError):
            as_rational(True)


class TestRatMatrix:
    """Test dense rational matrices."""

    def test_identity_is_neutral(self):
        """Test I @ M == M."""
        m = RatMatrix([[1, 2], [Fraction(1, 3), 4]])
        assert RatMatrix.identity(2) @ m == m
        assert mat_mul(m, RatMatrix.identity(2)) == m

    def test_integral_fractions_collapse_to_ints(self):
        """Test entry normalisation."""
        m = RatMatrix([[Fraction(4, 2), Fraction(1, 2)]])
        assert isinstance(m.data[0, 0], int)
        assert m[0, 1] == Fraction(1, 2)
        assert not m.is_integral()

    def test_shape_mismatch_raises(self):
        """Test incompatible products and sums."""
        a = RatMatrix.zeros(2, 3)
        with pytest.raises(DimensionMismatchError):
            a @ a
        with pytest.raises(DimensionMismatchError):
            a + RatMatrix.zeros(3, 2)

    def test_trace_needs_square(self):
        """Test trace on rectangular input."""
        with pytest.raises(NonSquareMatrixError):
            RatMatrix.zeros(2, 3).trace()
        assert trace(RatMatrix([[1, 5], [7, Fraction(1, 2)]])) == Fraction(3, 2)

    def test_scale_and_sum(self):
        """Test scalar multiples and matrix sums."""
        a = RatMatrix([[1, 0], [0, 1]])
        total = sum_matrices([a, a.scale(Fraction(1, 2))], 2, 2)
        assert total == RatMatrix.identity(2) * Fraction(3, 2)

    def test_matrix_is_read_only(self):
        """Test immutability of the backing array."""
        m = RatMatrix.identity(2)
        with pytest.raises(ValueError):
            m.data[0, 0] = 5

    def test_square_of_four_cycle(self):
        """Test A(C4)^2 = 2I + A_2(C4)."""
        a0, a1, a2 = distance_matrix_family(cycle(4))
        assert a1 @ a1 == a0.scale(2) + a2

    def test_trace_of_cube_square(self):
        """Test tr(A(Q3)^2) = 2m = 24."""
        a = hypercube(3).adjacency_matrix()
        assert trace(a @ a) == 24
        assert trace(a) == 0

    def test_symmetry(self):
        """Test the symmetry predicate on an adjacency matrix."""
        assert complete(4).adjacency_matrix().is_symmetric()
        assert not RatMatrix([[0, 1], [0, 0]]).is_symmetric()


class TestPolynomialEvaluation:
    """Test p(A) by Horner's rule."""

    def test_annihilating_polynomial_of_k2(self):
        """Test x^2 - 1 vanishes at the adjacency of K2."""
        a = complete(2).adjacency_matrix()
        assert eval_poly_at_matrix(RatPoly([-1, 0, 1]), a) == RatMatrix.zeros(2, 2)

    def test_rational_coefficients(self):
        """Test (1/2) x^2 at the K2 adjacency is I/2."""
        a = complete(2).adjacency_matrix()
        result = eval_poly_at_matrix(RatPoly([0, 0, Fraction(1, 2)]), a)
        assert result == RatMatrix.identity(2).scale(Fraction(1, 2))

    def test_zero_and_constant_polynomials(self):
        """Test degenerate polynomials."""
        a = complete(3).adjacency_matrix()
        assert eval_poly_at_matrix(RatPoly(), a) == RatMatrix.zeros(3, 3)
        assert eval_poly_at_matrix(RatPoly.constant(3), a) == RatMatrix.identity(3).scale(3)

    def test_agrees_with_repeated_products(self):
        """Test p(A) against explicit powers."""
        a = hypercube(3).adjacency_matrix()
        p = RatPoly([1, -2, 0, Fraction(1, 6)])
        a2 = a @ a
        expected = RatMatrix.identity(8) - a.scale(2) + (a2 @ a).scale(Fraction(1, 6))
        assert eval_poly_at_matrix(p, a) == expected

    def test_non_square_rejected(self):
        """Test evaluation needs a square matrix."""
        with pytest.raises(NonSquareMatrixError):
            eval_poly_at_matrix(RatPoly.x(), RatMatrix.zeros(2, 3))


class TestRatPoly:
    """Test polynomial arithmetic and text form."""

    def test_degree_and_trimming(self):
        """Test trailing zeros are dropped."""
        assert RatPoly([1, 2, 0, 0]).degree == 1
        assert RatPoly().degree is None
        assert RatPoly([0, 0]).is_zero()

    def test_arithmetic(self):
        """Test sum, difference, product and scalar division."""
        x = RatPoly.x()
        p = (x + 1) * (x - 1)
        assert p == RatPoly([-1, 0, 1])
        assert p - x * x == -1
        assert (p / 2).coefficients == (Fraction(-1, 2), Fraction(0), Fraction(1, 2))
        assert 3 - x == RatPoly([3, -1])

    def test_exact_evaluation(self):
        """Test evaluation at integers and fractions."""
        p = RatPoly([Fraction(-3, 2), 0, Fraction(1, 2)])
        assert p(3) == 3
        assert p(Fraction(1, 2)) == Fraction(-11, 8)

    def test_division_by_zero(self):
        """Test polynomial division by zero."""
        with pytest.raises(PolynomialError):
            RatPoly.x() / 0

    def test_text_grammar(self):
        """Test the documented ascending text form."""
        assert RatPoly([Fraction(-3, 2), 0, Fraction(1, 2)]).to_text() == "(-3/2) + (1/2)*x^2"
        assert RatPoly([-1, 1]).to_text() == "(-1) + x"
        assert RatPoly([0, -7, 0, 1]).to_text() == "(-7)*x + x^3"
        assert RatPoly.constant(1).to_text() == "1"
        assert RatPoly().to_text() == "0"

    def test_negative_monomial_degree(self):
        """Test monomial validation."""
        with pytest.raises(PolynomialError):
            RatPoly.monomial(-1)


class TestElimination:
    """Test fraction-free rank and minimal polynomial degree."""

    def test_integer_rank(self):
        """Test rank of small integer matrices."""
        assert integer_rank([[1, 2], [2, 4]]) == 1
        assert integer_rank([[2, 0, 1], [0, 3, 1], [2, 3, 2]]) == 2
        assert integer_rank([[2, 1], [1, 2]]) == 2
        assert integer_rank([]) == 0

    def test_ragged_rows_rejected(self):
        """Test rows of unequal length."""
        with pytest.raises(ValueError):
            integer_rank([[1, 2], [1]])

    def test_echelon_reports_dependence(self):
        """Test incremental insertion."""
        echelon = FractionFreeEchelon()
        assert echelon.insert([3, 6, 9])
        assert echelon.insert([1, 1, 1])
        assert not echelon.insert([5, 8, 11])
        assert echelon.rank == 2

    def test_min_poly_degree_of_known_spectra(self):
        """Test number of distinct eigenvalues."""
        assert min_poly_degree(complete(5).adjacency_matrix()) == 2
        assert min_poly_degree(hypercube(3).adjacency_matrix()) == 4
        assert min_poly_degree(RatMatrix.identity(4)) == 1
        assert min_poly_degree(RatMatrix(np.diag([1, 2, 2, 3]))) == 3

    def test_min_poly_degree_of_five_cycle(self):
        """Test C5 has three distinct eigenvalues."""
        assert min_poly_degree(cycle(5).adjacency_matrix()) == 3

    def test_min_poly_degree_needs_square(self):
        """Test rectangular input."""
        with pytest.raises(NonSquareMatrixError):
            min_poly_degree(RatMatrix.zeros(2, 3))
