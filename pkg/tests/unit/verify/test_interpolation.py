# ABOUTME: Unit tests for recovering det(x*M1 + y*M2 + z*M3) by least squares on the unit sphere.

import numpy as np
import pytest

from hyperdet.cli.generator import random_pencil
from hyperdet.detrep.pencil import HermitianPencil
from hyperdet.poly.monomials import monomial_count
from hyperdet.poly.parser import parse_polynomial
from hyperdet.verify.interpolation import fit_determinant, interpolate_determinant


def test_scalar_pencil_gives_square():
    pencil = HermitianPencil.from_matrices(np.eye(2), np.zeros((2, 2)), np.zeros((2, 2)))
    assert interpolate_determinant(pencil).allclose(parse_polynomial("x^2"), atol=1e-12)


def test_conic_pencil(conic_pencil, conic):
    assert interpolate_determinant(conic_pencil).allclose(conic, atol=1e-12)


def test_quartic_pencil_recovers_quartic_over_256(quartic_pencil, quartic):
    det = interpolate_determinant(quartic_pencil, seed=7)
    assert det.allclose(quartic / 256, atol=1e-10)


def test_fit_reports_samples_and_residual(quartic_pencil):
    fit = fit_determinant(quartic_pencil, seed=0)
    assert fit.sample_count == 2 * monomial_count(4)
    assert fit.fit_residual < 1e-12
    assert fit.min_singular_ratio >= 1e-10
    assert np.max(np.abs(fit.poly.coeffs.imag)) == 0.0


def test_random_degree_five_matches_pointwise_determinant():
    pencil = random_pencil(5, seed=11)
    det = interpolate_determinant(pencil, seed=3)
    pts = np.random.default_rng(99).standard_normal((20, 3))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    exact = np.array([pencil.determinant(p).real for p in pts])
    fitted = det.evaluate_many(pts).real
    scale = max(1.0, float(np.max(np.abs(exact))))
    assert np.max(np.abs(fitted - exact)) <= 1e-9 * scale


def test_fit_is_deterministic_per_seed(quartic_pencil):
    first = interpolate_determinant(quartic_pencil, seed=5)
    second = interpolate_determinant(quartic_pencil, seed=5)
    np.testing.assert_array_equal(first.coeffs, second.coeffs)


@pytest.mark.parametrize("d", [1, 3, 6])
def test_random_pencil_determinant_is_monic_in_x(d):
    det = interpolate_determinant(random_pencil(d, seed=d), seed=0)
    assert det.coefficient((d, 0, 0)) == pytest.approx(1.0, abs=1e-9)
