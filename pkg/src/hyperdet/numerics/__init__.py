# ABOUTME: Dense numerical kernels used by the pipeline stages.

from hyperdet.numerics.linalg import (
    DefinitenessResult,
    LeastSquaresSolution,
    det_numeric,
    is_positive_definite,
    least_squares,
    nullspace,
)
from hyperdet.numerics.roots import univariate_roots

__all__ = [
    "DefinitenessResult",
    "LeastSquaresSolution",
    "det_numeric",
    "is_positive_definite",
    "least_squares",
    "nullspace",
    "univariate_roots",
]
