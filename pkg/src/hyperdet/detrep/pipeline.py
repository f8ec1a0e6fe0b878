# ABOUTME: End-to-end determinantal representation: gate, intersect, split, basis, solve, scale, check.
# ABOUTME: Stages can be bypassed with caller data (interlacer, point set, basis); retries perturb e.

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

from hyperdet.common.config.hyperdet_settings import HyperdetSettings, get_hyperdet_settings
from hyperdet.common.observability.logging_utils import StageTimer, get_logger, stage_timer
from hyperdet.detrep.basis import VanishingBasis, extend_to_basis, vanishing_space
from hyperdet.detrep.system import assemble_system, solve_system
from hyperdet.errors import (
    IndefiniteOutputError,
    InvalidInputError,
    NonPositiveScaleError,
    NotHyperbolicError,
    NotInterlacingError,
    TransversalityError,
)
from hyperdet.intersect.curves import perturb_direction
from hyperdet.intersect.split import IntersectionSet, compute_intersection_set
from hyperdet.numerics.linalg import (
    DefinitenessResult,
    LeastSquaresSolution,
    det_numeric,
    is_positive_definite,
)
from hyperdet.poly.homogeneous import HomogeneousPoly, directional_derivative
from hyperdet.verify.checks import hyperbolicity_check, interlacing_check

if TYPE_CHECKING:
    from numpy.typing import ArrayLike

    from hyperdet.detrep.pencil import HermitianPencil

logger = get_logger(__name__)


@dataclass(frozen=True)
class RepresentOptions:
    """Optional stage inputs and run controls for represent().

    interlacer replaces D_e f; intersection replaces the computed point set;
    basis replaces intersection, split and basis extension altogether.
    """

    interlacer: HomogeneousPoly | None = None
    intersection: IntersectionSet | None = None
    basis: VanishingBasis | None = None
    seed: int = 0
    max_retries: int | None = None
    check_hyperbolicity: bool = True


@dataclass(frozen=True)
class StageTimings:
    intersection_seconds: float = 0.0
    total_seconds: float = 0.0


@dataclass(frozen=True)
class Representation:
    """f = c * det(x*M1 + y*M2 + z*M3) with the pencil definite at direction."""

    pencil: HermitianPencil
    c: float
    lsq: LeastSquaresSolution
    basis: VanishingBasis
    direction: np.ndarray
    definiteness: DefinitenessResult
    intersection: IntersectionSet | None = None
    retries: int = 0
    warnings: tuple[str, ...] = ()
    timings: StageTimings = field(default_factory=StageTimings)

    @property
    def d(self) -> int:
        return self.pencil.d


def _as_direction(e: ArrayLike) -> np.ndarray:
    direction = np.asarray(e, dtype=np.float64).reshape(-1)
    if direction.shape[0] != 3 or not np.all(np.isfinite(direction)) or not np.any(direction):
        raise InvalidInputError(f"Direction must be a finite non-zero 3-vector; got {e}")
    return direction


def scale_constant(pencil: HermitianPencil, f: HomogeneousPoly, e: ArrayLike) -> float:
    """c = f(e) / det(M(e)).

    Raises:
        NonPositiveScaleError: When c is not a positive real number.
    """
    direction = _as_direction(e)
    det = det_numeric(pencil.evaluate(direction))
    value = f(direction)
    if det == 0:
        raise NonPositiveScaleError("Pencil is singular at the direction; scale is undefined")
    c = value / det
    if not np.isfinite(c) or c.real <= 0 or abs(c.imag) > 1e-8 * abs(c):
        raise NonPositiveScaleError(f"Scale constant c = {c:.6g} is not positive")
    return float(c.real)


def normalize_representation(rep: Representation) -> HermitianPencil:
    """Pencil scaled by c^(1/d), so that its determinant is f itself."""
    if rep.c <= 0:
        raise NonPositiveScaleError(f"Cannot normalise with c = {rep.c}")
    return rep.pencil.scaled(rep.c ** (1.0 / rep.d))


def _gate_inputs(
    f: HomogeneousPoly,
    direction: np.ndarray,
    options: RepresentOptions,
    settings: HyperdetSettings,
) -> None:
    if not f.is_real(settings.poly_real_tol):
        raise InvalidInputError("Polynomial must have real coefficients")
    if f.degree < 1:
        raise InvalidInputError("Polynomial must have degree at least 1")
    value = f(direction).real
    if value <= 0:
        raise InvalidInputError(f"f(e) must be positive; got {value:.6g}")
    if not options.check_hyperbolicity:
        return
    result = hyperbolicity_check(
        f, direction, trials=settings.hyperbolicity_trials, seed=options.seed, tol=settings.hyperbolicity_tol
    )
    if not result.is_hyperbolic:
        raise NotHyperbolicError(
            f"Polynomial is not hyperbolic with respect to {direction.tolist()}: line through "
            f"{result.witness} has a root with imaginary part {result.worst_imaginary:.3e}"
        )
    if options.interlacer is not None:
        check = interlacing_check(
            f,
            options.interlacer,
            direction,
            trials=settings.hyperbolicity_trials,
            seed=options.seed,
            slack=settings.interlacing_slack,
        )
        if not check.is_interlacing:
            raise NotInterlacingError(
                f"Supplied interlacer does not interlace f along the line through {check.witness}"
            )


def represent(
    f: HomogeneousPoly,
    e: ArrayLike = (1.0, 0.0, 0.0),
    options: RepresentOptions | None = None,
    settings: HyperdetSettings | None = None,
) -> Representation:
    """Hermitian pencil with f = c * det(x*M1 + y*M2 + z*M3), c > 0, definite at e.

    On TransversalityError the direction is perturbed and the computed stages are rerun,
    up to max_retries times. Stage errors propagate.
    """
    settings = settings or get_hyperdet_settings()
    options = options or RepresentOptions()
    started = time.perf_counter()
    base_direction = _as_direction(e)
    _gate_inputs(f, base_direction, options, settings)

    max_retries = settings.max_retries if options.max_retries is None else options.max_retries
    retry_allowed = options.interlacer is None and options.intersection is None and options.basis is None
    d = f.degree
    intersection_seconds = 0.0
    warnings: list[str] = []

    attempt = 0
    while True:
        direction = (
            base_direction
            if attempt == 0
            else perturb_direction(base_direction, seed=options.seed + attempt, magnitude=settings.perturbation_magnitude)
        )
        g = options.interlacer if options.interlacer is not None else directional_derivative(f, direction)
        intersection = options.intersection
        try:
            if options.basis is not None:
                basis = options.basis
                warnings.extend(basis.warnings)
            else:
                if intersection is None:
                    timer = StageTimer("intersection")
                    try:
                        with stage_timer(logger, "intersection") as timer:
                            intersection = compute_intersection_set(
                                f, g, direction, seed=options.seed + attempt, settings=settings
                            )
                    finally:
                        # failed attempts count towards the intersection time too
                        intersection_seconds += timer.seconds
                else:
                    warnings.extend(intersection.diagnostics.warnings)
                space = vanishing_space(intersection.s_points, d, settings.nullspace_tol)
                basis = extend_to_basis(g, space, settings.span_tol)
        except TransversalityError as e:
            if not retry_allowed or attempt >= max_retries:
                raise
            attempt += 1
            logger.warning(f"{e.detail}; retrying with a perturbed direction ({attempt}/{max_retries})")
            continue
        break

    if attempt:
        warnings.append(f"direction perturbed to {direction.tolist()} after {attempt} retries")
    with stage_timer(logger, "solve"):
        system = assemble_system(basis, f)
        pencil, lsq = solve_system(system, settings)
    c = scale_constant(pencil, f, direction)
    definiteness = is_positive_definite(pencil.evaluate(direction), settings.hermitian_tol)
    if not definiteness.is_definite:
        raise IndefiniteOutputError(
            f"Pencil is not positive definite at {direction.tolist()} "
            f"(smallest eigenvalue {definiteness.min_eigenvalue:.3e})"
        )

    total = time.perf_counter() - started
    logger.info(f"Represented degree {d} polynomial: c = {c:.6g}, retries = {attempt}, {total:.3f}s")
    return Representation(
        pencil=pencil,
        c=c,
        lsq=lsq,
        basis=basis,
        direction=direction,
        definiteness=definiteness,
        intersection=intersection,
        retries=attempt,
        warnings=tuple(warnings),
        timings=StageTimings(intersection_seconds=intersection_seconds, total_seconds=total),
    )
