# ABOUTME: VanishingBasis: d forms of degree d-1 vanishing on S, the first one being the interlacer.
# ABOUTME: vanishing_space via an SVD nullspace, extend_to_basis by projection, Gram-Schmidt and QR.

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
import scipy.linalg

from hyperdet.common.config.constants import DEFAULT_INDEPENDENCE_TOL, DEFAULT_VANISHING_TOL
from hyperdet.common.config.hyperdet_settings import get_hyperdet_settings
from hyperdet.common.observability.logging_utils import get_logger
from hyperdet.errors import (
    DegreeMismatchError,
    NotInSpanError,
    VanishingDimensionError,
)
from hyperdet.intersect.points import ProjectivePoint, relative_residual
from hyperdet.numerics.linalg import nullspace
from hyperdet.poly.homogeneous import HomogeneousPoly
from hyperdet.poly.monomials import monomial_evaluation_matrix

if TYPE_CHECKING:
    from collections.abc import Sequence

logger = get_logger(__name__)

_TIE_RTOL = 1e-9


@dataclass(frozen=True)
class VanishingBasis:
    """a = (a11, ..., a1d): degree d-1 forms vanishing on S, entries[0] = a11."""

    entries: tuple[HomogeneousPoly, ...]
    warnings: tuple[str, ...] = ()

    @property
    def d(self) -> int:
        return len(self.entries)

    @property
    def coefficient_matrix(self) -> np.ndarray:
        """Columns are the coefficient vectors of the entries."""
        return np.column_stack([a.coeffs for a in self.entries])

    def max_vanishing_residual(self, points: Sequence[ProjectivePoint]) -> float:
        return max(
            (relative_residual(a, p.coords) for a in self.entries for p in points), default=0.0
        )

    def independence_ratio(self) -> float:
        s = scipy.linalg.svdvals(self.coefficient_matrix)
        return float(s[-1] / s[0]) if s.size and s[0] > 0 else 0.0

    @classmethod
    def from_supplied(
        cls,
        entries: Sequence[HomogeneousPoly],
        points: Sequence[ProjectivePoint] | None = None,
        vanishing_tol: float = DEFAULT_VANISHING_TOL,
        independence_tol: float = DEFAULT_INDEPENDENCE_TOL,
    ) -> VanishingBasis:
        """Caller-provided basis; dependence is an error, failure to vanish only a warning."""
        d = len(entries)
        if d == 0:
            raise VanishingDimensionError("A basis needs at least one entry")
        for k, a in enumerate(entries):
            if a.degree != d - 1:
                raise DegreeMismatchError(
                    f"Basis entry {k} has degree {a.degree}; a basis of {d} entries needs degree {d - 1}"
                )
        basis = cls(tuple(entries))
        ratio = basis.independence_ratio()
        if ratio <= independence_tol:
            raise VanishingDimensionError(
                f"Supplied basis entries are linearly dependent (singular value ratio {ratio:.3e})"
            )
        warnings = ["basis supplied by caller"]
        if points:
            worst = basis.max_vanishing_residual(points)
            if worst > vanishing_tol:
                warnings.append(f"supplied basis does not vanish on S (residual {worst:.3e})")
                logger.warning(warnings[-1])
        return cls(tuple(entries), tuple(warnings))


def vanishing_space(
    s_points: Sequence[ProjectivePoint], d: int, tol: float | None = None
) -> list[HomogeneousPoly]:
    """Orthonormal basis of the degree d-1 forms vanishing at every point of S.

    Raises:
        VanishingDimensionError: When the numerical dimension differs from d.
    """
    tol = get_hyperdet_settings().nullspace_tol if tol is None else tol
    if d < 1:
        raise VanishingDimensionError(f"Degree must be at least 1; got {d}")
    coords = np.array([p.coords for p in s_points], dtype=np.complex128).reshape(-1, 3)
    evaluation = monomial_evaluation_matrix(coords, d - 1)
    null = nullspace(evaluation, tol)
    if null.shape[1] != d:
        raise VanishingDimensionError(
            f"Forms of degree {d - 1} vanishing on {len(s_points)} points span dimension "
            f"{null.shape[1]}, expected {d}"
        )
    return [HomogeneousPoly(d - 1, null[:, k]) for k in range(d)]


def _unit_leading(coeffs: np.ndarray) -> np.ndarray:
    """Scale so the largest coefficient is 1; near-ties go to the earliest monomial."""
    mags = np.abs(coeffs)
    pivot = int(np.argmax(mags >= mags.max() * (1.0 - _TIE_RTOL)))
    return coeffs / coeffs[pivot]


def extend_to_basis(
    g: HomogeneousPoly, space: Sequence[HomogeneousPoly], span_tol: float | None = None
) -> VanishingBasis:
    """(g, a12, ..., a1d) spanning the same space; extension entries have a unit largest coefficient.

    Raises:
        NotInSpanError: When g is not in the span of space to span_tol (relative).
    """
    span_tol = get_hyperdet_settings().span_tol if span_tol is None else span_tol
    d = len(space)
    if any(a.degree != g.degree for a in space):
        raise DegreeMismatchError(f"Space entries must have degree {g.degree}")
    if g.is_zero():
        raise NotInSpanError("The interlacer is the zero polynomial")

    basis = np.column_stack([a.coeffs for a in space])
    g_unit = g.coeffs / np.linalg.norm(g.coeffs)
    projection = basis @ (basis.conj().T @ g_unit)
    residual = float(np.linalg.norm(g_unit - projection))
    if residual > span_tol:
        raise NotInSpanError(
            f"Interlacer is not in the vanishing space (relative residual {residual:.3e} > {span_tol:.1e})"
        )

    remainders = basis - np.outer(g_unit, g_unit.conj() @ basis)
    drop = int(np.argmin(np.linalg.norm(remainders, axis=0)))
    keep = [k for k in range(d) if k != drop]
    q, _ = np.linalg.qr(np.column_stack([g_unit, remainders[:, keep]]))
    extension = [HomogeneousPoly(g.degree, _unit_leading(q[:, k])) for k in range(1, d)]
    logger.debug(f"Extended interlacer to a basis of {d} forms (projection residual {residual:.2e})")
    return VanishingBasis((g, *extension))
