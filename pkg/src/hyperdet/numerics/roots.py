# ABOUTME: Univariate complex root finding by companion-matrix eigenvalues plus one Newton polish.

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
import scipy.linalg

from hyperdet.common.config.constants import DEFAULT_LEADING_COEFF_TOL
from hyperdet.errors import InvalidInputError, VanishingLeadingCoefficientError

if TYPE_CHECKING:
    from numpy.typing import ArrayLike


def companion_matrix(coeffs: np.ndarray) -> np.ndarray:
    """Companion matrix of c_0 + c_1 t + ... + c_n t^n (ascending, c_n != 0)."""
    n = coeffs.shape[0] - 1
    monic = coeffs[:n] / coeffs[n]
    comp = np.zeros((n, n), dtype=np.complex128)
    comp[1:, :-1] = np.eye(n - 1)
    comp[:, -1] = -monic
    return comp


def magnitude_bound(coeffs: np.ndarray, t: complex) -> float:
    """sum |c_i| |t|^i, the evaluation scale of a univariate polynomial at t."""
    return float(np.polyval(np.abs(coeffs[::-1]), abs(t)))


def univariate_roots(
    coeffs: ArrayLike, leading_tol: float = DEFAULT_LEADING_COEFF_TOL
) -> np.ndarray:
    """All n roots (with multiplicity) of the degree-n polynomial with ascending coefficients.

    Roots are returned sorted by (real, imaginary) part.

    Raises:
        VanishingLeadingCoefficientError: If |c_n| <= leading_tol * max |c_i|.
    """
    c = np.asarray(coeffs, dtype=np.complex128).reshape(-1)
    if c.size == 0:
        raise InvalidInputError("Polynomial has no coefficients")
    scale = float(np.max(np.abs(c)))
    if scale == 0.0 or abs(c[-1]) <= leading_tol * scale:
        raise VanishingLeadingCoefficientError(
            f"Leading coefficient {abs(c[-1]):.3e} is negligible against {scale:.3e}"
        )
    if c.size == 1:
        return np.zeros(0, dtype=np.complex128)

    roots = scipy.linalg.eigvals(companion_matrix(c))

    desc = c[::-1]
    ddesc = np.polyder(desc)
    values = np.polyval(desc, roots)
    slopes = np.polyval(ddesc, roots)
    with np.errstate(divide="ignore", invalid="ignore"):
        polished = roots - values / slopes
    better = np.isfinite(polished) & (np.abs(np.polyval(desc, polished)) < np.abs(values))
    roots = np.where(better, polished, roots)

    return roots[np.lexsort((roots.imag, roots.real))]
