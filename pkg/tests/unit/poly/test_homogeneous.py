# ABOUTME: Unit tests for HomogeneousPoly evaluation, arithmetic, derivatives and coordinate changes.
# ABOUTME: Uses the conic and the two-node quartic as worked cases.

import numpy as np
import pytest
import scipy.stats

from hyperdet.errors import (
    DegreeMismatchError,
    DimensionMismatchError,
    InvalidInputError,
    SingularTransformError,
)
from hyperdet.poly.homogeneous import (
    HomogeneousPoly,
    change_coords,
    conjugate_coeffs,
    directional_derivative,
    gradient,
    multiply,
    multiply_by_variable,
    partial_derivative,
)
from hyperdet.poly.parser import parse_polynomial


def _random_poly(d: int, seed: int) -> HomogeneousPoly:
    rng = np.random.default_rng(seed)
    n = (d + 2) * (d + 1) // 2
    return HomogeneousPoly(d, rng.standard_normal(n) + 1j * rng.standard_normal(n))


def test_coefficient_length_is_checked():
    with pytest.raises(DimensionMismatchError):
        HomogeneousPoly(2, [1.0, 2.0])


def test_coeffs_are_read_only():
    p = HomogeneousPoly(1, [1.0, 0.0, 0.0])
    with pytest.raises(ValueError):
        p.coeffs[0] = 2.0


def test_evaluate_conic(conic):
    assert conic((1, 0, 0)) == pytest.approx(1.0)


def test_evaluate_quartic_at_node_and_direction(quartic):
    assert abs(quartic((0, 1, 1))) < 1e-14
    assert quartic((1, 0, 0)) == pytest.approx(1.0)


def test_homogeneity():
    p = _random_poly(5, 1)
    pt = np.array([0.3 + 0.1j, -1.2, 0.7j])
    lam = 1.7 - 0.4j
    assert p(lam * pt) == pytest.approx(lam**5 * p(pt), rel=1e-12)


def test_evaluate_many_matches_pointwise():
    p = _random_poly(3, 2)
    pts = np.random.default_rng(3).standard_normal((4, 3))
    np.testing.assert_allclose(p.evaluate_many(pts), [p(v) for v in pts], rtol=1e-13)


def test_is_real_flag():
    assert parse_polynomial("x^2 - y^2").is_real()
    assert not parse_polynomial("x^2 + iy^2").is_real()


def test_addition_is_pointwise():
    p, q = _random_poly(3, 4), _random_poly(3, 5)
    v = np.array([0.2, -0.5 + 1j, 1.1])
    assert (p + q)(v) == pytest.approx(p(v) + q(v), rel=1e-13)
    assert (p - q)(v) == pytest.approx(p(v) - q(v), rel=1e-13)


def test_adding_different_degrees_fails():
    with pytest.raises(DegreeMismatchError):
        _ = _random_poly(2, 0) + _random_poly(3, 0)


def test_scalar_multiplication_and_division():
    p = parse_polynomial("x + 2y")
    assert (2 * p).allclose(parse_polynomial("2x + 4y"))
    assert (p / 2).allclose(parse_polynomial("0.5x + y"))


def test_multiply_is_exact():
    p = parse_polynomial("x + y")
    q = parse_polynomial("x - y")
    assert multiply(p, q).allclose(parse_polynomial("x^2 - y^2"))
    assert (p * q).degree == 2


def test_multiply_by_variable():
    p = parse_polynomial("x^2 + 3yz")
    assert multiply_by_variable(p, 2).allclose(parse_polynomial("x^2z + 3yz^2"))


@pytest.mark.parametrize(
    ("e", "expected"),
    [((1, 0, 0), "2x"), ((0, 1, 0), "-2y"), ((0, 0, 1), "-2z")],
)
def test_directional_derivative_of_conic(conic, e, expected):
    assert directional_derivative(conic, e).allclose(parse_polynomial(expected))


def test_directional_derivative_of_quartic(quartic):
    g = directional_derivative(quartic, (1, 0, 0))
    assert g.allclose(4 * parse_polynomial("x^3 - 2xy^2 - 2xz^2"))


def test_directional_derivative_of_constant_fails():
    with pytest.raises(InvalidInputError):
        directional_derivative(HomogeneousPoly(0, [3.0]), (1, 0, 0))


def test_partial_derivative_rejects_bad_variable():
    with pytest.raises(InvalidInputError):
        partial_derivative(parse_polynomial("x^2"), 3)


@pytest.mark.parametrize("d", [1, 3, 6])
def test_euler_identity(d):
    p = _random_poly(d, d)
    total = HomogeneousPoly.zero(d)
    for var, dp in enumerate(gradient(p)):
        total = total + multiply_by_variable(dp, var)
    np.testing.assert_allclose(total.coeffs, d * p.coeffs, rtol=1e-12, atol=1e-12)


def test_conjugate_coeffs():
    assert conjugate_coeffs(parse_polynomial("z - iy")).allclose(parse_polynomial("z + iy"))
    real = parse_polynomial("x^2 - 3yz")
    assert conjugate_coeffs(real).allclose(real)


def test_conjugate_of_basis_entry():
    a12 = parse_polynomial("ix^3 + 4ixy^2 - 4x^2z - 4y^2z + 4z^3")
    expected = parse_polynomial("-ix^3 - 4ixy^2 - 4x^2z - 4y^2z + 4z^3")
    assert conjugate_coeffs(a12).allclose(expected)


def test_change_coords_identity_and_swap():
    x = parse_polynomial("x")
    assert change_coords(x, np.eye(3)).allclose(x)
    swap = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]], dtype=float)
    assert change_coords(x, swap).allclose(parse_polynomial("y"))


def test_change_coords_matches_pointwise_evaluation():
    p = _random_poly(4, 7)
    t = scipy.stats.ortho_group.rvs(3, random_state=np.random.default_rng(8))
    q = change_coords(p, t)
    for v in np.random.default_rng(9).standard_normal((10, 3)):
        assert q(v) == pytest.approx(p(t @ v), rel=1e-12, abs=1e-12)


def test_change_coords_is_inverted_by_inverse():
    p = _random_poly(3, 10)
    t = np.array([[1.0, 2.0, 0.0], [0.0, 1.0, 3.0], [1.0, 0.0, 1.0]])
    back = change_coords(change_coords(p, t), np.linalg.inv(t))
    np.testing.assert_allclose(back.coeffs, p.coeffs, atol=1e-10)


def test_change_coords_singular_matrix():
    with pytest.raises(SingularTransformError):
        change_coords(parse_polynomial("x"), np.zeros((3, 3)))


def test_terms_and_coefficient(conic):
    assert [(tuple(m), c) for m, c in conic.terms()] == [
        ((2, 0, 0), 1),
        ((0, 2, 0), -1),
        ((0, 0, 2), -1),
    ]
    assert conic.coefficient((0, 2, 0)) == -1


def test_str_uses_printer(conic):
    assert str(conic) == "x^2 - y^2 - z^2"
