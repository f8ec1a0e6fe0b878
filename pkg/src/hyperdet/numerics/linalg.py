# ABOUTME: Dense linear-algebra kernels: SVD nullspace, least squares, determinants, definiteness.
# ABOUTME: Thin contracts over scipy.linalg with the diagnostics the solver stages report.

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
import scipy.linalg

from hyperdet.common.config.constants import (
    DEFAULT_HERMITIAN_TOL,
    DEFAULT_NULLSPACE_TOL,
    DEFAULT_RANK_RTOL,
)
from hyperdet.errors import DimensionMismatchError, NotHermitianError

if TYPE_CHECKING:
    from numpy.typing import ArrayLike


@dataclass(frozen=True)
class LeastSquaresSolution:
    """Minimiser of |Ax - b| plus the diagnostics of the solve.

    singular_values are those of A in decreasing order; rank counts the ones above
    rank_rtol * sigma_max.
    """

    x: np.ndarray
    residual_norm: float
    smallest_singular_value: float
    rank: int
    singular_values: np.ndarray

    @property
    def largest_singular_value(self) -> float:
        return float(self.singular_values[0]) if self.singular_values.size else 0.0


@dataclass(frozen=True)
class DefinitenessResult:
    is_definite: bool
    min_eigenvalue: float

    def __bool__(self) -> bool:
        return self.is_definite


def _as_matrix(a: ArrayLike, dtype: type = np.complex128) -> np.ndarray:
    arr = np.asarray(a, dtype=dtype)
    if arr.ndim != 2:
        raise DimensionMismatchError(f"Expected a 2-D matrix; got shape {arr.shape}")
    return arr


def nullspace(a: ArrayLike, tol: float = DEFAULT_NULLSPACE_TOL) -> np.ndarray:
    """Orthonormal basis (as columns) of the right null space of A.

    Right-singular vectors whose singular value is <= tol * sigma_max, in SVD order.
    """
    mat = _as_matrix(a)
    n = mat.shape[1]
    if mat.shape[0] == 0:
        return np.eye(n, dtype=np.complex128)
    _, s, vh = scipy.linalg.svd(mat, full_matrices=True)
    sigma_max = float(s[0]) if s.size else 0.0
    rank = int(np.count_nonzero(s > tol * sigma_max)) if sigma_max > 0 else 0
    return vh[rank:].conj().T


def least_squares(
    a: ArrayLike, b: ArrayLike, rank_rtol: float = DEFAULT_RANK_RTOL
) -> LeastSquaresSolution:
    """SVD-based least squares for a real overdetermined system (m >= n)."""
    mat = _as_matrix(a, np.float64)
    rhs = np.asarray(b, dtype=np.float64).reshape(-1)
    m, n = mat.shape
    if rhs.shape[0] != m:
        raise DimensionMismatchError(f"Right-hand side has {rhs.shape[0]} entries; A has {m} rows")
    if m < n:
        raise DimensionMismatchError(f"Least squares needs m >= n; got {m} x {n}")

    x, _, rank, s = scipy.linalg.lstsq(mat, rhs, cond=rank_rtol, lapack_driver="gelsd")
    residual = float(np.linalg.norm(mat @ x - rhs))
    return LeastSquaresSolution(
        x=x,
        residual_norm=residual,
        smallest_singular_value=float(s[-1]) if s.size else 0.0,
        rank=int(rank),
        singular_values=s,
    )


def det_numeric(a: ArrayLike) -> complex:
    """Determinant from a partially pivoted LU factorisation."""
    mat = _as_matrix(a)
    if mat.shape[0] != mat.shape[1]:
        raise DimensionMismatchError(f"Determinant needs a square matrix; got {mat.shape}")
    if mat.shape[0] == 0:
        return 1.0 + 0j
    with warnings.catch_warnings():
        # exactly singular input is fine here: the determinant is 0
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(mat, check_finite=False)
    swaps = int(np.count_nonzero(piv != np.arange(piv.shape[0])))
    sign = -1.0 if swaps % 2 else 1.0
    return complex(sign * np.prod(np.diag(lu)))


def is_positive_definite(
    h: ArrayLike, hermitian_tol: float = DEFAULT_HERMITIAN_TOL
) -> DefinitenessResult:
    """Positive definiteness of a Hermitian matrix via its smallest eigenvalue.

    Raises:
        NotHermitianError: If H differs from H^* by more than hermitian_tol * max(1, max|H|).
    """
    mat = _as_matrix(h)
    if mat.shape[0] != mat.shape[1]:
        raise DimensionMismatchError(f"Definiteness needs a square matrix; got {mat.shape}")
    scale = max(1.0, float(np.max(np.abs(mat)))) if mat.size else 1.0
    skew = float(np.max(np.abs(mat - mat.conj().T))) if mat.size else 0.0
    if skew > hermitian_tol * scale:
        raise NotHermitianError(f"Matrix is not Hermitian: max |H - H*| = {skew:.3e}")
    sym = (mat + mat.conj().T) / 2
    min_eig = float(scipy.linalg.eigvalsh(sym)[0])
    return DefinitenessResult(is_definite=min_eig > 0, min_eigenvalue=min_eig)
