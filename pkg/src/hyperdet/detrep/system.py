# ABOUTME: Affine-linear system in the 3d^2 Hermitian parameters from a*M = (f, 0, ...) and M*conj(a)^T = (f, 0, ...)^T.
# ABOUTME: Coefficients come from exact exponent bookkeeping; the real system interleaves (Re, Im) rows.

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from hyperdet.common.config.constants import DEFAULT_CONSISTENCY_TOL
from hyperdet.common.config.hyperdet_settings import HyperdetSettings, get_hyperdet_settings
from hyperdet.common.observability.logging_utils import get_logger
from hyperdet.detrep.basis import VanishingBasis
from hyperdet.detrep.pencil import HermitianPencil, parameter_count, parameter_weights
from hyperdet.errors import (
    DegreeMismatchError,
    LargeResidualError,
    RankDeficientError,
    SystemConsistencyError,
)
from hyperdet.numerics.linalg import LeastSquaresSolution, least_squares
from hyperdet.poly.homogeneous import HomogeneousPoly, multiply_by_variable
from hyperdet.poly.monomials import monomial_count

logger = get_logger(__name__)


@dataclass(frozen=True)
class LinearSystem:
    """Complex equations (two blocks of d entries times binom(d+2, 2) monomials) and their real form.

    Complex row index: block * d * n_monomials + entry * n_monomials + monomial.
    Real row 2q is Re of complex row q, row 2q + 1 is its Im.
    """

    d: int
    complex_matrix: np.ndarray
    complex_rhs: np.ndarray
    consistency_error: float

    @property
    def complex_equation_count(self) -> int:
        return int(self.complex_matrix.shape[0])

    @property
    def unknown_count(self) -> int:
        return int(self.complex_matrix.shape[1])

    @property
    def matrix(self) -> np.ndarray:
        return _realify(self.complex_matrix)

    @property
    def rhs(self) -> np.ndarray:
        return _realify(self.complex_rhs[:, None])[:, 0]

    def row_index(self, block: int, entry: int, monomial: int) -> int:
        n_mon = monomial_count(self.d)
        return block * self.d * n_mon + entry * n_mon + monomial


def _realify(a: np.ndarray) -> np.ndarray:
    out = np.empty((2 * a.shape[0], a.shape[1]), dtype=np.float64)
    out[0::2] = a.real
    out[1::2] = a.imag
    return out


def _shifted_coefficients(basis: VanishingBasis) -> np.ndarray:
    """shifts[k, r, m] = coefficient of monomial m in a_r * x_k."""
    return np.array(
        [[multiply_by_variable(a, k).coeffs for a in basis.entries] for k in range(3)]
    )


def assemble_system(
    basis: VanishingBasis,
    f: HomogeneousPoly,
    consistency_tol: float = DEFAULT_CONSISTENCY_TOL,
) -> LinearSystem:
    """Coefficient matching for both vector equations.

    Raises:
        DegreeMismatchError: When f does not have degree d.
        SystemConsistencyError: When the second block is not the conjugate of the first.
    """
    d = basis.d
    if f.degree != d:
        raise DegreeMismatchError(f"Polynomial has degree {f.degree}; basis has {d} entries")
    n_mon = monomial_count(d)
    weights = parameter_weights(d)
    shifts = _shifted_coefficients(basis)

    # entry s of a*M: sum over r, k of (a_r x_k) * M_k[r, s]
    left = np.einsum("krm,krsp->smp", shifts, weights)
    # entry r of M*conj(a)^T: sum over s, k of M_k[r, s] * conj(a_s x_k)
    right = np.einsum("ksm,krsp->rmp", shifts.conj(), weights)

    scale = max(1.0, float(np.max(np.abs(left))))
    mismatch = float(np.max(np.abs(right - left.conj()))) / scale
    if mismatch > consistency_tol:
        raise SystemConsistencyError(
            f"Conjugate block deviates from the first block by {mismatch:.3e}"
        )

    matrix = np.concatenate(
        [left.reshape(d * n_mon, parameter_count(d)), right.reshape(d * n_mon, parameter_count(d))]
    )
    rhs = np.zeros(2 * d * n_mon, dtype=np.complex128)
    rhs[0:n_mon] = f.coeffs
    rhs[d * n_mon : d * n_mon + n_mon] = np.conj(f.coeffs)
    logger.debug(
        f"Assembled {matrix.shape[0]} complex equations in {matrix.shape[1]} real unknowns (d = {d})"
    )
    return LinearSystem(d=d, complex_matrix=matrix, complex_rhs=rhs, consistency_error=mismatch)


def solve_system(
    system: LinearSystem, settings: HyperdetSettings | None = None
) -> tuple[HermitianPencil, LeastSquaresSolution]:
    """Least-squares solve; the solution must be unique and (nearly) exact.

    Raises:
        RankDeficientError: When rank < 3d^2.
        LargeResidualError: When the residual exceeds residual_tol * |b|.
    """
    settings = settings or get_hyperdet_settings()
    rhs = system.rhs
    solution = least_squares(system.matrix, rhs, rank_rtol=settings.rank_rtol)
    if solution.rank < system.unknown_count:
        raise RankDeficientError(
            f"System rank {solution.rank} < {system.unknown_count} unknowns "
            f"(smallest singular value {solution.smallest_singular_value:.3e})"
        )
    rhs_norm = float(np.linalg.norm(rhs))
    if solution.residual_norm > settings.residual_tol * rhs_norm:
        raise LargeResidualError(
            f"Least-squares residual {solution.residual_norm:.3e} exceeds "
            f"{settings.residual_tol:.1e} * |b| = {settings.residual_tol * rhs_norm:.3e}"
        )
    logger.info(
        f"Solved {system.complex_equation_count} complex equations: rank {solution.rank}, "
        f"residual {solution.residual_norm:.2e}, smallest singular value "
        f"{solution.smallest_singular_value:.2e}"
    )
    return HermitianPencil.from_parameters(solution.x, system.d), solution
