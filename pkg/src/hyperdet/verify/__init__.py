# ABOUTME: Verification toolkit: determinant interpolation, error metrics, hyperbolicity and interlacing.

from hyperdet.verify.checks import (
    HyperbolicityResult,
    InterlacingResult,
    check_definite,
    hyperbolicity_check,
    interlacing_check,
    restrict_to_line,
)
from hyperdet.verify.interpolation import DeterminantFit, fit_determinant, interpolate_determinant
from hyperdet.verify.metrics import ErrorReport, representation_error

__all__ = [
    "DeterminantFit",
    "ErrorReport",
    "HyperbolicityResult",
    "InterlacingResult",
    "check_definite",
    "fit_determinant",
    "hyperbolicity_check",
    "interlacing_check",
    "interpolate_determinant",
    "representation_error",
    "restrict_to_line",
]
