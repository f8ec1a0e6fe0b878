# ABOUTME: Recover det(x*M1 + y*M2 + z*M3) as a real form by least squares on random unit-sphere samples.

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from hyperdet.common.config.hyperdet_settings import get_hyperdet_settings
from hyperdet.common.observability.logging_utils import get_logger
from hyperdet.detrep.pencil import HermitianPencil
from hyperdet.errors import IllConditionedFitError, NonRealDeterminantError
from hyperdet.numerics.linalg import det_numeric, least_squares
from hyperdet.poly.homogeneous import HomogeneousPoly
from hyperdet.poly.monomials import monomial_count, monomial_evaluation_matrix

logger = get_logger(__name__)


@dataclass(frozen=True)
class DeterminantFit:
    poly: HomogeneousPoly
    fit_residual: float
    sample_count: int
    min_singular_ratio: float


def fit_determinant(pencil: HermitianPencil, seed: int | None = 0) -> DeterminantFit:
    """Least-squares fit of the degree-d determinant from oversampled real points.

    fit_residual is |V c - values| / |values|.

    Raises:
        NonRealDeterminantError: When a sampled determinant has a noticeable imaginary part.
        IllConditionedFitError: When every sample set is ill-conditioned.
    """
    settings = get_hyperdet_settings()
    d = pencil.d
    n_samples = settings.fit_oversampling * monomial_count(d)
    rng = np.random.default_rng(seed)
    ratio = 0.0
    for attempt in range(1, settings.fit_attempts + 1):
        pts = rng.standard_normal((n_samples, 3))
        pts /= np.linalg.norm(pts, axis=1, keepdims=True)
        vander = monomial_evaluation_matrix(pts, d).real
        s = scipy.linalg.svdvals(vander)
        ratio = float(s[-1] / s[0])
        if ratio < settings.fit_min_singular_ratio:
            logger.warning(f"Determinant fit attempt {attempt}: sample matrix ratio {ratio:.3e}, resampling")
            continue

        values = np.array([det_numeric(pencil.evaluate(p)) for p in pts])
        scale = max(1.0, float(np.max(np.abs(values))))
        worst_imag = float(np.max(np.abs(values.imag)))
        if worst_imag > settings.fit_imag_tol * scale:
            raise NonRealDeterminantError(
                f"Determinant of a Hermitian pencil has imaginary part {worst_imag:.3e} at a real point"
            )
        solution = least_squares(vander, values.real, rank_rtol=settings.rank_rtol)
        norm = float(np.linalg.norm(values.real))
        residual = solution.residual_norm / norm if norm > 0 else solution.residual_norm
        return DeterminantFit(HomogeneousPoly(d, solution.x), residual, n_samples, ratio)

    raise IllConditionedFitError(
        f"Interpolation samples stayed ill-conditioned after {settings.fit_attempts} attempts "
        f"(last ratio {ratio:.3e})"
    )


def interpolate_determinant(pencil: HermitianPencil, seed: int | None = 0) -> HomogeneousPoly:
    return fit_determinant(pencil, seed).poly
