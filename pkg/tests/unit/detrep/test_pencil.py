# ABOUTME: Unit tests for HermitianPencil and its real parameterisation.

import numpy as np
import pytest

from hyperdet.detrep.pencil import HermitianPencil, parameter_count, parameter_index
from hyperdet.errors import DimensionMismatchError, InvalidInputError, NotHermitianError


def test_parameter_count():
    assert [parameter_count(d) for d in (1, 2, 4)] == [3, 12, 48]


def test_parameter_layout_for_two_by_two():
    assert parameter_index(2, 0, 0, 0) == 0
    assert parameter_index(2, 0, 1, 1) == 1
    assert parameter_index(2, 0, 0, 1, "re") == 2
    assert parameter_index(2, 0, 0, 1, "im") == 3
    assert parameter_index(2, 1, 0, 0) == 4
    assert parameter_index(2, 2, 0, 1, "im") == 11


def test_parameter_layout_upper_entries_are_row_major():
    d = 4
    uppers = [(i, j) for i in range(d) for j in range(i + 1, d)]
    indices = [parameter_index(d, 1, i, j) for i, j in uppers]
    assert indices == [d * d + d + 2 * n for n in range(len(uppers))]


def test_diagonal_has_no_imaginary_part():
    with pytest.raises(InvalidInputError):
        parameter_index(3, 0, 1, 1, "im")
    with pytest.raises(InvalidInputError):
        parameter_index(3, 0, 2, 1)


def test_from_parameters_is_exactly_hermitian():
    x = np.random.default_rng(0).standard_normal(parameter_count(5))
    pencil = HermitianPencil.from_parameters(x, 5)
    assert pencil.max_hermitian_error() == 0.0
    np.testing.assert_array_equal(pencil.to_parameters(), x)


def test_from_parameters_checks_length():
    with pytest.raises(DimensionMismatchError):
        HermitianPencil.from_parameters(np.zeros(10), 2)


def test_from_matrices_rejects_non_hermitian():
    bad = np.array([[1.0, 1j], [1j, 1.0]])
    with pytest.raises(NotHermitianError):
        HermitianPencil.from_matrices(bad, np.eye(2), np.eye(2))


def test_evaluate_and_determinant(conic_pencil, conic):
    np.testing.assert_allclose(conic_pencil.evaluate((1, 0, 0)), np.diag([0.5, 2.0]))
    for pt in np.random.default_rng(1).standard_normal((5, 3)):
        assert conic_pencil.determinant(pt) == pytest.approx(conic(pt), rel=1e-12, abs=1e-12)


def test_scaled(quartic_pencil):
    np.testing.assert_allclose(quartic_pencil.scaled(4).m1, 4 * quartic_pencil.m1)


def test_shape_is_checked():
    with pytest.raises(DimensionMismatchError):
        HermitianPencil(np.zeros((2, 3, 3)))
