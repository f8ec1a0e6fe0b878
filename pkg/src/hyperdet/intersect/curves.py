# ABOUTME: Intersection of two plane curves V(f) and V(g) from the null space of their Macaulay matrix.
# ABOUTME: Random orthogonal pre-rotation with retries, multiplication-matrix eigenvectors, Newton polish.

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
import scipy.linalg
import scipy.stats

from hyperdet.common.config.hyperdet_settings import HyperdetSettings, get_hyperdet_settings
from hyperdet.common.observability.logging_utils import get_logger
from hyperdet.errors import (
    DegreeMismatchError,
    InvalidInputError,
    TransversalityError,
)
from hyperdet.intersect.points import (
    ProjectivePoint,
    check_transverse,
    min_pairwise_distance,
    point_residual,
    sort_points,
)
from hyperdet.poly.homogeneous import HomogeneousPoly, change_coords, gradient
from hyperdet.poly.monomials import monomial_count, monomial_exponents, monomial_indices

if TYPE_CHECKING:
    from numpy.typing import ArrayLike

logger = get_logger(__name__)


class _RotationRejected(Exception):
    """Internal signal: this coordinate change did not produce a clean point set."""


@dataclass(frozen=True)
class RefinedPoint:
    point: ProjectivePoint
    residual: float
    iterations: int


class _CurvePair:
    """f and g with their gradients, evaluated together during Newton steps."""

    def __init__(self, f: HomogeneousPoly, g: HomogeneousPoly) -> None:
        self.f = f
        self.g = g
        self.grad_f = gradient(f)
        self.grad_g = gradient(g)

    def values(self, pt: np.ndarray) -> np.ndarray:
        return np.array([self.f(pt), self.g(pt)])

    def jacobian(self, pt: np.ndarray) -> np.ndarray:
        return np.array([[d(pt) for d in self.grad_f], [d(pt) for d in self.grad_g]])

    def residual(self, pt: np.ndarray) -> float:
        return point_residual(self.f, self.g, pt)


def _refine(
    pair: _CurvePair, start: ArrayLike, max_iter: int, stall_limit: int
) -> RefinedPoint:
    pt = ProjectivePoint.from_coords(start).coords.copy()
    chart = int(np.argmax(np.abs(pt)))
    free = [v for v in range(3) if v != chart]

    best = pt.copy()
    best_res = pair.residual(pt)
    stalls = 0
    iterations = 0
    while iterations < max_iter and stalls < stall_limit and best_res > 0:
        iterations += 1
        jac = pair.jacobian(pt)[:, free]
        step = np.linalg.lstsq(jac, -pair.values(pt), rcond=None)[0]
        pt = pt.copy()
        pt[free] += step
        if not np.all(np.isfinite(pt)):
            break
        res = pair.residual(pt)
        if res < best_res:
            best, best_res, stalls = pt.copy(), res, 0
        else:
            stalls += 1
    return RefinedPoint(ProjectivePoint.from_coords(best), best_res, iterations)


def refine_point(
    f: HomogeneousPoly,
    g: HomogeneousPoly,
    start: ProjectivePoint | ArrayLike,
    max_iter: int | None = None,
    stall_limit: int | None = None,
) -> RefinedPoint:
    """Newton on (f, g) in the affine chart of the largest coordinate.

    Iterates past convergence until the relative residual stops decreasing, so that
    starting values near a multiple point collapse onto it.
    """
    settings = get_hyperdet_settings()
    coords = start.coords if isinstance(start, ProjectivePoint) else start
    return _refine(
        _CurvePair(f, g),
        coords,
        max_iter if max_iter is not None else settings.newton_max_iter,
        stall_limit if stall_limit is not None else settings.newton_stall_limit,
    )


def macaulay_matrix(f: HomogeneousPoly, g: HomogeneousPoly, degree: int) -> np.ndarray:
    """Rows m*f and m*g for every monomial m that lifts them to `degree`.

    Columns follow the degree-`degree` monomial order. A vector in the null space
    is a linear functional killing every such product; the evaluation vector of
    each common zero of f and g is one.
    """
    count = monomial_count(degree)
    rows = []
    for poly in (f, g):
        if poly.degree > degree:
            raise DegreeMismatchError(
                f"Cannot lift a degree {poly.degree} form to degree {degree}"
            )
        for shift in monomial_exponents(degree - poly.degree):
            row = np.zeros(count, dtype=np.complex128)
            row[monomial_indices(poly.exponents + shift, degree)] = poly.coeffs
            rows.append(row)
    return np.array(rows)


def _normalized(p: HomogeneousPoly) -> HomogeneousPoly:
    return HomogeneousPoly(p.degree, p.coeffs / p.max_abs_coeff())


def _eigen_candidates(
    f_rot: HomogeneousPoly,
    g_rot: HomogeneousPoly,
    rng: np.random.Generator,
    rank_tol: float,
) -> np.ndarray:
    """Approximate points of V(f_rot) and V(g_rot), one row per point.

    The Macaulay matrix at degree 2d-1 has a null space of dimension exactly d(d-1)
    for a complete intersection, spanned by the point evaluation vectors. Shifting
    by x and y against z gives commuting multiplication matrices; the eigenvectors
    of a random combination map back to evaluation vectors, from which the points
    are read off.
    """
    d = f_rot.degree
    count = d * (d - 1)
    degree = 2 * d - 1
    mac = macaulay_matrix(_normalized(f_rot), _normalized(g_rot), degree)
    _, sing, vh = scipy.linalg.svd(mac)
    rank = mac.shape[1] - count
    if rank > sing.shape[0] or sing[rank - 1] <= rank_tol * sing[0]:
        raise _RotationRejected(
            f"null space is larger than {count} (singular value ratio "
            f"{sing[min(rank, sing.shape[0]) - 1] / sing[0]:.3e})"
        )
    null = vh[rank:].conj().T

    lower = monomial_exponents(degree - 1)
    shifted = [monomial_indices(lower + unit, degree) for unit in np.eye(3, dtype=np.int64)]
    base = null[shifted[2]]
    mult_x = scipy.linalg.lstsq(base, null[shifted[0]])[0]
    mult_y = scipy.linalg.lstsq(base, null[shifted[1]])[0]
    # complex weights keep conjugate points apart
    a, b = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    _, vectors = scipy.linalg.eig(a * mult_x + b * mult_y)
    evaluations = null @ vectors

    # triples[m, n] = m(p_n) * p_n for each degree 2d-2 monomial m
    triples = np.stack([evaluations[idx] for idx in shifted], axis=-1)
    best = np.argmax(np.linalg.norm(triples, axis=2), axis=0)
    return triples[best, np.arange(count)]


def _validate_pair(f: HomogeneousPoly, g: HomogeneousPoly, settings: HyperdetSettings) -> None:
    if g.degree != f.degree - 1:
        raise DegreeMismatchError(
            f"Interlacer must have degree {f.degree - 1}; got {g.degree}"
        )
    for name, poly in (("f", f), ("g", g)):
        if not poly.is_real(settings.poly_real_tol):
            raise InvalidInputError(f"{name} must have real coefficients")
        if poly.is_zero():
            raise InvalidInputError(f"{name} is the zero polynomial")


def intersect_curves(
    f: HomogeneousPoly,
    g: HomogeneousPoly,
    seed: int | None = 0,
    settings: HyperdetSettings | None = None,
) -> list[ProjectivePoint]:
    """The d(d-1) points of V(f) and V(g), refined and sorted.

    Raises:
        TransversalityError: When no rotation yields d(d-1) distinct converged points,
            or when a point has a near-singular scaled Jacobian.
    """
    settings = settings or get_hyperdet_settings()
    _validate_pair(f, g, settings)
    d = f.degree
    if d < 2:
        return []
    expected = d * (d - 1)
    f_real = HomogeneousPoly(f.degree, f.coeffs.real)
    g_real = HomogeneousPoly(g.degree, g.coeffs.real)
    pair = _CurvePair(f_real, g_real)
    rng = np.random.default_rng(seed)

    last_reason = "no attempt made"
    for attempt in range(1, settings.rotation_attempts + 1):
        rotation = scipy.stats.ortho_group.rvs(3, random_state=rng)
        try:
            candidates = _eigen_candidates(
                change_coords(f_real, rotation),
                change_coords(g_real, rotation),
                rng,
                settings.macaulay_rank_tol,
            )
            refined = [
                _refine(pair, rotation @ v, settings.newton_max_iter, settings.newton_stall_limit)
                for v in candidates
            ]
            worst = max(r.residual for r in refined)
            if worst > settings.newton_tol:
                raise _RotationRejected(f"Newton did not converge (residual {worst:.3e})")
            points = sort_points([r.point for r in refined])
            separation = min_pairwise_distance(points)
            if separation <= settings.separation_tol:
                raise _RotationRejected(f"coincident points (min distance {separation:.3e})")
        except _RotationRejected as e:
            last_reason = str(e)
            logger.warning(f"Intersection attempt {attempt} rejected: {last_reason}")
            continue

        report = check_transverse(
            f_real,
            g_real,
            points,
            separation_tol=settings.separation_tol,
            jacobian_tol=settings.jacobian_tol,
            real_tol=settings.point_real_tol,
        )
        if not report.nonsingular:
            raise TransversalityError(
                f"Intersection is not transverse: smallest scaled Jacobian singular value "
                f"{report.min_jacobian:.3e} < {settings.jacobian_tol:.1e}"
            )
        logger.info(
            f"Intersected degree {d} and {d - 1} curves: {len(points)} points "
            f"(attempt {attempt}, max residual {worst:.2e})"
        )
        if len(points) != expected:
            raise TransversalityError(f"Expected {expected} points; found {len(points)}")
        return points

    raise TransversalityError(
        f"Could not find {expected} distinct transverse points after "
        f"{settings.rotation_attempts} attempts: {last_reason}"
    )


def perturb_direction(
    e: ArrayLike, seed: int | None = None, magnitude: float | None = None
) -> np.ndarray:
    """A generic direction near e: e plus a seeded random offset of relative size magnitude.

    The result is rescaled to the norm of e. magnitude 0 returns e unchanged.
    """
    direction = np.asarray(e, dtype=np.float64).reshape(-1)
    if direction.shape[0] != 3 or not np.any(direction):
        raise InvalidInputError(f"Direction must be a non-zero 3-vector; got {direction}")
    if magnitude is None:
        magnitude = get_hyperdet_settings().perturbation_magnitude
    if magnitude == 0:
        return direction.copy()
    norm = float(np.linalg.norm(direction))
    offset = np.random.default_rng(seed).standard_normal(3)
    moved = direction + magnitude * norm * offset / np.linalg.norm(offset)
    return moved * (norm / np.linalg.norm(moved))
