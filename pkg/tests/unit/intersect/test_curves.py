# ABOUTME: Unit tests for curve intersection, Newton refinement and direction perturbation.

import numpy as np
import pytest

from hyperdet.cli.generator import generate_random_hyperbolic
from hyperdet.errors import DegreeMismatchError, TransversalityError
from hyperdet.intersect.curves import (
    intersect_curves,
    macaulay_matrix,
    perturb_direction,
    refine_point,
)
from hyperdet.intersect.points import chordal_distance, point_residual
from hyperdet.intersect.split import compute_intersection_set
from hyperdet.poly.homogeneous import directional_derivative
from hyperdet.poly.monomials import monomial_count, monomial_evaluation_matrix
from hyperdet.poly.parser import parse_polynomial


def test_conic_meets_its_polar_in_two_points(conic):
    points = intersect_curves(conic, parse_polynomial("2x"))
    assert len(points) == 2
    targets = [np.array([0, 1, 1j]), np.array([0, 1, -1j])]
    for target in targets:
        assert min(chordal_distance(p, target) for p in points) < 1e-10


@pytest.mark.parametrize("d", [3, 4, 5])
def test_bezout_count_on_random_instances(d):
    f = generate_random_hyperbolic(d, seed=d)
    g = directional_derivative(f, (1, 0, 0))
    points = intersect_curves(f, g, seed=1)
    assert len(points) == d * (d - 1)
    for p in points:
        assert point_residual(f, g, p) <= 1e-12
        assert not p.is_real()


@pytest.mark.slow
@pytest.mark.parametrize("d", [7, 8, 9, 10])
def test_bezout_count_at_high_degree(d):
    f = generate_random_hyperbolic(d, seed=d)
    g = directional_derivative(f, (1, 0, 0))
    points = intersect_curves(f, g, seed=0)
    assert len(points) == d * (d - 1)
    for p in points:
        assert point_residual(f, g, p) <= 1e-12
        assert not p.is_real()


def test_macaulay_matrix_of_conic_and_polar(conic):
    mac = macaulay_matrix(conic, parse_polynomial("2x"), 3)
    # three shifts of f, six of g, over the ten cubic monomials
    assert mac.shape == (9, monomial_count(3))
    common = np.array([[0, 1, 1j], [0, 1, -1j]])
    np.testing.assert_allclose(mac @ monomial_evaluation_matrix(common, 3).T, 0, atol=1e-14)
    assert np.linalg.matrix_rank(mac) == monomial_count(3) - 2


def test_macaulay_null_space_has_bezout_dimension(quartic):
    g = parse_polynomial("x^3 - 2xy^2 - 2xz^2")
    mac = macaulay_matrix(quartic, g, 7)
    assert mac.shape == (monomial_count(3) + monomial_count(4), monomial_count(7))
    sing = np.linalg.svd(mac, compute_uv=False)
    # only the syzygy f*g - g*f is dependent, leaving 12 = 4 * 3 null directions
    assert int(np.sum(sing > 1e-10 * sing[0])) == mac.shape[0] - 1
    assert mac.shape[1] - (mac.shape[0] - 1) == 12


def test_macaulay_matrix_rejects_low_degree(conic):
    with pytest.raises(DegreeMismatchError):
        macaulay_matrix(conic, parse_polynomial("2x"), 1)


def test_intersection_is_seed_deterministic():
    f = generate_random_hyperbolic(3, seed=11)
    g = directional_derivative(f, (1, 0, 0))
    first = intersect_curves(f, g, seed=4)
    second = intersect_curves(f, g, seed=4)
    for a, b in zip(first, second, strict=True):
        np.testing.assert_array_equal(a.coords, b.coords)


def test_interlacer_degree_is_checked(conic):
    with pytest.raises(DegreeMismatchError):
        intersect_curves(conic, conic)


def test_nodes_make_the_intersection_fail(quartic):
    g = parse_polynomial("x^3 - 2xy^2 - 2xz^2")
    with pytest.raises(TransversalityError):
        compute_intersection_set(quartic, g, (1, 0, 0))


def test_compute_intersection_set_for_conic(conic):
    result = compute_intersection_set(conic, parse_polynomial("2x"), (1, 0, 0))
    assert len(result) == 2
    assert len(result.s_indices) == 1
    assert result.diagnostics.direction == (1.0, 0.0, 0.0)
    assert result.diagnostics.max_residual <= 1e-12
    assert not result.diagnostics.supplied


def test_refine_point_converges(conic):
    g = parse_polynomial("2x")
    refined = refine_point(conic, g, [1e-3, 1.0, 1j + 2e-3])
    assert refined.residual <= 1e-14
    assert chordal_distance(refined.point, np.array([0, 1, 1j])) < 1e-12
    assert refined.iterations >= 1


def test_perturb_direction_zero_magnitude_is_identity():
    np.testing.assert_array_equal(perturb_direction((1, 0, 0), seed=3, magnitude=0), [1, 0, 0])


def test_perturb_direction_stays_close_and_keeps_norm():
    e = np.array([2.0, 0.0, 0.0])
    moved = perturb_direction(e, seed=7, magnitude=1e-3)
    assert np.linalg.norm(moved) == pytest.approx(2.0)
    assert 0 < np.linalg.norm(moved - e) <= 2.1e-3
    np.testing.assert_array_equal(moved, perturb_direction(e, seed=7, magnitude=1e-3))
