# ABOUTME: Pydantic settings for the hyperdet pipeline.
# ABOUTME: Loads tolerances, retry counts and bench parallelism from HYPERDET_* environment variables.
# ABOUTME: Callers may register a customised instance via set_hyperdet_settings().

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from hyperdet.common.config.constants import (
    DEFAULT_FIT_ATTEMPTS,
    DEFAULT_FIT_IMAG_TOL,
    DEFAULT_FIT_MIN_SINGULAR_RATIO,
    DEFAULT_FIT_OVERSAMPLING,
    DEFAULT_HERMITIAN_TOL,
    DEFAULT_HYPERBOLICITY_TOL,
    DEFAULT_HYPERBOLICITY_TRIALS,
    DEFAULT_INTERLACING_SLACK,
    DEFAULT_JACOBIAN_TOL,
    DEFAULT_MACAULAY_RANK_TOL,
    DEFAULT_MAX_RETRIES,
    DEFAULT_NEWTON_MAX_ITER,
    DEFAULT_NEWTON_STALL_LIMIT,
    DEFAULT_NEWTON_TOL,
    DEFAULT_NULLSPACE_TOL,
    DEFAULT_PAIR_TOL,
    DEFAULT_PERTURBATION_MAGNITUDE,
    DEFAULT_POINT_REAL_TOL,
    DEFAULT_POLY_REAL_TOL,
    DEFAULT_RANK_RTOL,
    DEFAULT_RESIDUAL_TOL,
    DEFAULT_ROTATION_ATTEMPTS,
    DEFAULT_SEPARATION_TOL,
    DEFAULT_SPAN_TOL,
    ENV_PREFIX,
)


class HyperdetSettings(BaseSettings):
    """Numerical tolerances and run options, overridable through HYPERDET_* variables."""

    model_config = SettingsConfigDict(
        env_prefix=ENV_PREFIX,
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Reality / pairing / transversality
    poly_real_tol: float = Field(
        default=DEFAULT_POLY_REAL_TOL, gt=0, description="Max |Im| for a polynomial to be real"
    )
    point_real_tol: float = Field(
        default=DEFAULT_POINT_REAL_TOL, gt=0, description="Max |Im| for a point to be real"
    )
    pair_tol: float = Field(
        default=DEFAULT_PAIR_TOL, gt=0, description="Max distance between a point and its conjugate"
    )
    separation_tol: float = Field(
        default=DEFAULT_SEPARATION_TOL,
        gt=0,
        description="Min chordal distance between distinct intersection points",
    )
    jacobian_tol: float = Field(
        default=DEFAULT_JACOBIAN_TOL,
        gt=0,
        description="Min smallest singular value of the scaled intersection Jacobian",
    )

    # Intersection
    newton_tol: float = Field(
        default=DEFAULT_NEWTON_TOL, gt=0, description="Relative Newton residual to accept a point"
    )
    newton_max_iter: int = Field(default=DEFAULT_NEWTON_MAX_ITER, ge=1)
    newton_stall_limit: int = Field(
        default=DEFAULT_NEWTON_STALL_LIMIT,
        ge=1,
        description="Consecutive non-improving Newton steps before refinement stops",
    )
    rotation_attempts: int = Field(
        default=DEFAULT_ROTATION_ATTEMPTS,
        ge=1,
        description="Random coordinate changes tried before giving up on an intersection",
    )
    macaulay_rank_tol: float = Field(
        default=DEFAULT_MACAULAY_RANK_TOL,
        gt=0,
        description="Smallest kept Macaulay singular value relative to the largest",
    )

    # Linear algebra
    nullspace_tol: float = Field(
        default=DEFAULT_NULLSPACE_TOL, gt=0, description="Nullspace threshold relative to sigma_max"
    )
    span_tol: float = Field(
        default=DEFAULT_SPAN_TOL, gt=0, description="Max relative projection residual of a11"
    )
    rank_rtol: float = Field(
        default=DEFAULT_RANK_RTOL, gt=0, description="Relative singular value cutoff for rank"
    )
    residual_tol: float = Field(
        default=DEFAULT_RESIDUAL_TOL, gt=0, description="Max least-squares residual over |b|"
    )
    hermitian_tol: float = Field(default=DEFAULT_HERMITIAN_TOL, gt=0)

    # Verification
    hyperbolicity_tol: float = Field(default=DEFAULT_HYPERBOLICITY_TOL, gt=0)
    hyperbolicity_trials: int = Field(default=DEFAULT_HYPERBOLICITY_TRIALS, ge=1)
    interlacing_slack: float = Field(default=DEFAULT_INTERLACING_SLACK, ge=0)
    fit_oversampling: int = Field(default=DEFAULT_FIT_OVERSAMPLING, ge=1)
    fit_attempts: int = Field(default=DEFAULT_FIT_ATTEMPTS, ge=1)
    fit_min_singular_ratio: float = Field(default=DEFAULT_FIT_MIN_SINGULAR_RATIO, gt=0)
    fit_imag_tol: float = Field(default=DEFAULT_FIT_IMAG_TOL, gt=0)

    # Retries
    perturbation_magnitude: float = Field(default=DEFAULT_PERTURBATION_MAGNITUDE, ge=0)
    max_retries: int = Field(default=DEFAULT_MAX_RETRIES, ge=0)

    # Bench parallelism (env: HYPERDET_THREADS)
    threads: int = Field(default=1, ge=1, description="Worker processes for bench sweeps")


_settings: HyperdetSettings | None = None


def set_hyperdet_settings(instance: HyperdetSettings | None) -> None:
    """Register the settings instance used by the pipeline (None restores env defaults)."""
    global _settings
    _settings = instance


def get_hyperdet_settings() -> HyperdetSettings:
    """Return the registered settings instance, or a default HyperdetSettings()."""
    if _settings is not None:
        return _settings
    return HyperdetSettings()
