"""Tests for exact rational matrices."""

from fractions import Fraction

import pytest

from fcy_workbench._errors import WorkbenchError
from fcy_workbench._linalg import ExactMatrix, as_fraction, dot, fraction_str, integer_vector


def test_fraction_str():
    assert fraction_str(Fraction(3, 6)) == "1/2"
    assert fraction_str(4) == "4"
    assert fraction_str(Fraction(-1, 42)) == "-1/42"
    assert as_fraction("2/4") == Fraction(1, 2)


def test_matmul_and_identity():
    m = ExactMatrix.from_rows([[1, 2], [3, 4]])
    assert m @ ExactMatrix.identity(2) == m
    assert (m @ m).rows() == ((7, 10), (15, 22))


def test_identity_and_zeros_mix_with_built_matrices():
    m = ExactMatrix.from_rows([[0, 1], [0, 0]])
    assert (ExactMatrix.identity(2) - m).rows() == ((1, -1), (0, 1))
    assert (m + ExactMatrix.zeros(2, 2)) == m
    assert (ExactMatrix.zeros(2, 2) @ m).is_zero()
    assert (ExactMatrix.identity(2) @ m) == m


def test_inverse_is_exact():
    m = ExactMatrix.from_rows([[2, 1], [1, 1]])
    assert (m @ m.inverse()).is_identity()
    half = ExactMatrix.from_rows([[2, 0], [0, 2]]).inverse()
    assert half.entry(0, 0) == Fraction(1, 2)


def test_singular_inverse_raises():
    with pytest.raises(WorkbenchError, match="not invertible"):
        ExactMatrix.from_rows([[1, 2], [2, 4]]).inverse()


def test_rank_and_nullspace():
    m = ExactMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
    assert m.rank() == 1
    basis = m.nullspace()
    assert len(basis) == 2
    for v in basis:
        assert m.apply(v) == (0, 0)


def test_left_nullspace():
    m = ExactMatrix.from_rows([[1], [1]])
    (y,) = m.left_nullspace()
    assert dot(y, (1, 1)) == 0


def test_empty_shapes():
    m = ExactMatrix.from_rows([], ncols=3)
    assert m.shape == (0, 3)
    assert m.rank() == 0
    assert len(m.nullspace()) == 3
    assert (ExactMatrix.zeros(2, 0) @ ExactMatrix.zeros(0, 3)).is_zero()


def test_solve_full_column_rank():
    a = ExactMatrix.from_rows([[1, 0], [0, 1], [1, 1]])
    x = ExactMatrix.from_rows([[2], [3]])
    assert a.solve(a @ x) == x


def test_solve_rejects_inconsistent_system():
    a = ExactMatrix.from_rows([[1], [0]])
    with pytest.raises(ValueError, match="no unique solution"):
        a.solve(ExactMatrix.from_rows([[0], [1]]))


def test_power_negative_and_zero():
    m = ExactMatrix.from_rows([[1, 1], [0, 1]])
    assert m**0 == ExactMatrix.identity(2)
    assert (m**-3 @ m**3).is_identity()


def test_antisymmetric_and_integral():
    assert ExactMatrix.from_rows([[0, 1], [-1, 0]]).is_antisymmetric()
    assert not ExactMatrix.from_rows([[0, Fraction(1, 2)], [0, 0]]).is_integral()


def test_row_length_mismatch():
    with pytest.raises(WorkbenchError, match="row of length 2"):
        ExactMatrix.from_rows([[1, 2], [3]])


def test_block_diagonal():
    m = ExactMatrix.block_diagonal([ExactMatrix.identity(1), ExactMatrix.from_rows([[2, 3]])])
    assert m.rows() == ((1, 0, 0), (0, 2, 3))


def test_strings_roundtrip():
    m = ExactMatrix.from_rows([[Fraction(1, 3), 2]])
    assert m.to_strings() == [["1/3", "2"]]
    assert ExactMatrix.from_strings(m.to_strings(), ncols=2) == m


def test_integer_vector_rejects_fractions():
    assert integer_vector((Fraction(4, 2), 3)) == (2, 3)
    with pytest.raises(ValueError, match="not an integer"):
        integer_vector((Fraction(1, 2),))
