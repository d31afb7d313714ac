"""
Tests for exact scalars, polynomials, matrices and sparse row reduction.
"""

from fractions import Fraction

import pytest

from components.arithmetic.combinations import LinearCombination
from components.arithmetic.echelon import EchelonBasis
from components.arithmetic.matrices import (
    ScalarMatrix,
    matrix_determinant,
    matrix_nullspace,
    matrix_rank,
    matrix_solve,
)
from components.arithmetic.polynomials import (
    X,
    Y,
    divides,
    format_polynomial,
    monomial,
    poly_shift,
    polynomial,
    polynomial_from_json,
    polynomial_to_json,
    total_degree,
)
from components.arithmetic.scalars import (
    ONE,
    ZERO,
    format_scalar,
    imag_part,
    parse_scalar,
    real_part,
    scalar,
    scalar_pow,
)
from components.errors import ScalarFormatError, SingularMatrix, ZeroToNegativePower


@pytest.mark.parametrize(
    "text, real, imag",
    [
        ("3", 3, 0),
        ("-1/2", Fraction(-1, 2), 0),
        ("i", 0, 1),
        ("-i", 0, -1),
        ("3*i", 0, 3),
        ("2/3i", 0, Fraction(2, 3)),
        ("1/2-3/4*i", Fraction(1, 2), Fraction(-3, 4)),
        (" 1 + i ", 1, 1),
    ],
)
def test_parse_scalar(text, real, imag):
    value = parse_scalar(text)
    assert real_part(value) == real
    assert imag_part(value) == imag


@pytest.mark.parametrize("text", ["", "1/0", "abc", "1.5", "2+"])
def test_parse_scalar_rejects_malformed_input(text):
    with pytest.raises(ScalarFormatError):
        parse_scalar(text)


def test_format_scalar_omits_zero_parts():
    assert format_scalar(scalar(3)) == "3"
    assert format_scalar(scalar(0, 1)) == "1*i"
    assert format_scalar(scalar(Fraction(1, 2), Fraction(-3, 4))) == "1/2-3/4*i"
    assert parse_scalar(format_scalar(scalar(Fraction(-5, 7), 2))) == scalar(Fraction(-5, 7), 2)


def test_gaussian_arithmetic_is_exact():
    i = scalar(0, 1)
    assert i * i == -ONE
    assert (scalar(1, 1) * scalar(1, -1)) == scalar(2)
    assert ONE / scalar(0, 2) == scalar(0, Fraction(-1, 2))


def test_scalar_pow():
    assert scalar_pow(scalar(2), 10) == scalar(1024)
    assert scalar_pow(scalar(2), -2) == scalar(Fraction(1, 4))
    assert scalar_pow(ZERO, 0) == ONE
    with pytest.raises(ZeroToNegativePower):
        scalar_pow(ZERO, -1)


def test_poly_shift_expands_binomially():
    p = X**2 * Y
    shifted = poly_shift(p, 1, -1)
    expected = (X + 1) ** 2 * (Y - 1)
    assert shifted == expected
    assert poly_shift(p, 0, 0) == p


def test_polynomial_json_and_degree():
    p = polynomial({(2, 1): "1/2", (0, 0): "i"})
    assert total_degree(p) == 3
    assert total_degree(polynomial({})) == -1
    assert polynomial_from_json(polynomial_to_json(p)) == p
    assert polynomial_from_json([{"xexp": 1, "coeff": "2"}, {"xexp": 1, "coeff": "-2"}]) == polynomial({})


def test_divides():
    assert divides(X, X**2 * Y + X)
    assert not divides(X, X + 1)
    assert divides(X, polynomial({}))


def test_format_polynomial():
    assert format_polynomial(polynomial({})) == "0"
    assert format_polynomial(monomial(2, 1, 3)) == "(3)*X^2*Y"


def test_linear_combination_drops_cancelled_terms():
    a = LinearCombination({"u": "1", "v": "2"})
    b = LinearCombination({"u": "-1"})
    total = a + b
    assert total.keys() == ["v"]
    assert (a - a).is_zero()
    assert total.scale(0).is_zero()
    assert LinearCombination.sum_of([(scalar(2), b), (ONE, a)]) == LinearCombination({"u": "-1", "v": "2"})


def test_matrix_solve_and_determinant():
    m = ScalarMatrix([[2, 1], [1, "i"]])
    x = matrix_solve(m, [3, 2])
    assert m.apply(x) == (scalar(3), scalar(2))
    assert matrix_determinant(m) == scalar(0, 2) - ONE


def test_matrix_solve_rejects_singular_matrix():
    with pytest.raises(SingularMatrix):
        matrix_solve(ScalarMatrix([[1, 2], [2, 4]]), [1, 1])


def test_nullspace_and_rank():
    m = ScalarMatrix([[1, 2, 3], [2, 4, 6]])
    kernel = matrix_nullspace(m)
    assert len(kernel) == 2
    assert all(m.apply(v) == (ZERO, ZERO) for v in kernel)
    assert matrix_rank(m) == 1
    assert matrix_nullspace(ScalarMatrix.identity(3)) == []


def test_block_matrix():
    one = ScalarMatrix.identity(1)
    zero = ScalarMatrix.zeros(1, 1)
    assert ScalarMatrix.block([[one, zero], [zero, one]]) == ScalarMatrix.identity(2)


def test_echelon_basis_span_and_nullspace():
    basis = EchelonBasis()
    assert basis.add({"a": 1, "b": 1})
    assert basis.add({"b": 1, "c": 1})
    assert not basis.add({"a": 1, "b": 2, "c": 1})
    assert basis.dimension == 2
    assert basis.contains({"a": 1, "c": -1})

    kernel = basis.nullspace(["a", "b", "c"])
    assert len(kernel) == 1
    (solution,) = kernel
    for row in basis.basis():
        assert not sum((coeff * solution.get(key, ZERO) for key, coeff in row.items()), ZERO)


def test_echelon_nullspace_rejects_unknown_keys():
    basis = EchelonBasis()
    basis.add({"z": 1})
    with pytest.raises(ValueError):
        basis.nullspace(["a"])
