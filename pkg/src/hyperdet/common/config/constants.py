# ABOUTME: Shared constants for the hyperdet pipeline.
# ABOUTME: Single source of truth for default tolerances, counts and file names.

from __future__ import annotations

# ---------------------------------------------------------------------------
# Reality / pairing / separation
# ---------------------------------------------------------------------------

DEFAULT_POLY_REAL_TOL: float = 1e-12
DEFAULT_POINT_REAL_TOL: float = 1e-8
DEFAULT_PAIR_TOL: float = 1e-8
DEFAULT_SEPARATION_TOL: float = 1e-7
DEFAULT_JACOBIAN_TOL: float = 1e-8

# ---------------------------------------------------------------------------
# Intersection (A1)
# ---------------------------------------------------------------------------

DEFAULT_NEWTON_TOL: float = 1e-12
DEFAULT_NEWTON_MAX_ITER: int = 100
DEFAULT_NEWTON_STALL_LIMIT: int = 3
DEFAULT_ROTATION_ATTEMPTS: int = 5
DEFAULT_LEADING_COEFF_TOL: float = 1e-13
DEFAULT_MACAULAY_RANK_TOL: float = 1e-12

# ---------------------------------------------------------------------------
# Linear algebra (A4)-(A6)
# ---------------------------------------------------------------------------

DEFAULT_NULLSPACE_TOL: float = 1e-9
DEFAULT_SPAN_TOL: float = 1e-7
DEFAULT_RANK_RTOL: float = 1e-12
DEFAULT_RESIDUAL_TOL: float = 1e-6
DEFAULT_HERMITIAN_TOL: float = 1e-12
DEFAULT_CONSISTENCY_TOL: float = 1e-14
DEFAULT_INDEPENDENCE_TOL: float = 1e-10
DEFAULT_VANISHING_TOL: float = 1e-8

# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

DEFAULT_HYPERBOLICITY_TOL: float = 1e-7
DEFAULT_HYPERBOLICITY_TRIALS: int = 50
DEFAULT_INTERLACING_SLACK: float = 1e-8
DEFAULT_FIT_OVERSAMPLING: int = 2
DEFAULT_FIT_ATTEMPTS: int = 3
DEFAULT_FIT_MIN_SINGULAR_RATIO: float = 1e-10
DEFAULT_FIT_IMAG_TOL: float = 1e-10
DEFAULT_VERIFY_TOL: float = 1e-6

# ---------------------------------------------------------------------------
# Retries / perturbation
# ---------------------------------------------------------------------------

DEFAULT_PERTURBATION_MAGNITUDE: float = 1e-3
DEFAULT_MAX_RETRIES: int = 3

# ---------------------------------------------------------------------------
# Random instances (normal entries, mean 1, standard deviation 0.5)
# ---------------------------------------------------------------------------

GENERATOR_MEAN: float = 1.0
GENERATOR_STD: float = 0.5
DEFAULT_BENCH_INSTANCES: int = 20
DEFAULT_BENCH_DEGREES: str = "3..10"

# ---------------------------------------------------------------------------
# Files / environment
# ---------------------------------------------------------------------------

SETTINGS_FILE_KEY: str = "hyperdet"
ENV_PREFIX: str = "HYPERDET_"

# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------

DEFAULT_DIRECTION: str = "1,0,0"
EXIT_OK: int = 0
EXIT_VERIFY_FAILED: int = 6
