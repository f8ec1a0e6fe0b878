# ABOUTME: ProjectivePoint in canonical normalisation, chordal distance and the transversality report.
# ABOUTME: A point's largest-modulus coordinate is exactly 1 (earliest index on ties).

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np
import scipy.linalg

from hyperdet.common.config.constants import (
    DEFAULT_JACOBIAN_TOL,
    DEFAULT_POINT_REAL_TOL,
    DEFAULT_SEPARATION_TOL,
)
from hyperdet.errors import DimensionMismatchError, InvalidInputError
from hyperdet.poly.homogeneous import HomogeneousPoly, gradient

if TYPE_CHECKING:
    from collections.abc import Sequence

    from numpy.typing import ArrayLike

# coordinates whose moduli agree to this relative tolerance count as tied
_TIE_RTOL = 1e-9


@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    """A point of complex projective 2-space; build with from_coords()."""

    coords: np.ndarray

    @classmethod
    def from_coords(cls, raw: ArrayLike) -> ProjectivePoint:
        arr = np.array(raw, dtype=np.complex128).reshape(-1)
        if arr.shape[0] != 3:
            raise DimensionMismatchError(f"Projective point needs 3 coordinates; got {arr.shape[0]}")
        if not np.all(np.isfinite(arr)):
            raise InvalidInputError(f"Projective point has non-finite coordinates: {arr}")
        mags = np.abs(arr)
        pivot = int(np.argmax(mags >= mags.max() * (1.0 - _TIE_RTOL)))
        if arr[pivot] == 0:
            raise InvalidInputError("The zero vector is not a projective point")
        arr = arr / arr[pivot]
        arr[pivot] = 1.0
        arr.setflags(write=False)
        return cls(arr)

    def is_real(self, tol: float = DEFAULT_POINT_REAL_TOL) -> bool:
        return bool(np.max(np.abs(self.coords.imag)) <= tol)

    def conjugate(self) -> ProjectivePoint:
        return ProjectivePoint.from_coords(np.conj(self.coords))

    def sort_key(self) -> tuple[float, ...]:
        return tuple(v for c in self.coords for v in (float(c.real), float(c.imag)))

    def distance(self, other: ProjectivePoint) -> float:
        return chordal_distance(self, other)

    def __str__(self) -> str:
        return "[" + ":".join(f"{complex(c):.6g}" for c in self.coords) + "]"


def chordal_distance(p: ProjectivePoint | ArrayLike, q: ProjectivePoint | ArrayLike) -> float:
    """|u ^ v| / (|u| |v|): the sine of the angle between the two lines."""
    u = p.coords if isinstance(p, ProjectivePoint) else np.asarray(p, dtype=np.complex128)
    v = q.coords if isinstance(q, ProjectivePoint) else np.asarray(q, dtype=np.complex128)
    minors = np.array([u[0] * v[1] - u[1] * v[0], u[0] * v[2] - u[2] * v[0], u[1] * v[2] - u[2] * v[1]])
    return float(np.linalg.norm(minors) / (np.linalg.norm(u) * np.linalg.norm(v)))


def sort_points(points: Sequence[ProjectivePoint]) -> list[ProjectivePoint]:
    return sorted(points, key=ProjectivePoint.sort_key)


def min_pairwise_distance(points: Sequence[ProjectivePoint]) -> float:
    best = float("inf")
    for a in range(len(points)):
        for b in range(a + 1, len(points)):
            best = min(best, chordal_distance(points[a], points[b]))
    return best


def relative_residual(p: HomogeneousPoly, pt: np.ndarray) -> float:
    bound = p.magnitude_bound(pt)
    return abs(p(pt)) / bound if bound > 0 else 0.0


def point_residual(f: HomogeneousPoly, g: HomogeneousPoly, pt: ProjectivePoint | np.ndarray) -> float:
    """max(|f(p)|, |g(p)|) with each value scaled by its magnitude bound at p."""
    coords = pt.coords if isinstance(pt, ProjectivePoint) else pt
    return max(relative_residual(f, coords), relative_residual(g, coords))


def jacobian_singular_value(
    f: HomogeneousPoly,
    g: HomogeneousPoly,
    pt: ProjectivePoint,
    grads: tuple[Sequence[HomogeneousPoly], Sequence[HomogeneousPoly]] | None = None,
) -> float:
    """Smallest singular value of the 2x3 Jacobian with rows scaled by degree and magnitude."""
    grad_f, grad_g = grads if grads is not None else (gradient(f), gradient(g))
    rows = []
    for poly, grad in ((f, grad_f), (g, grad_g)):
        scale = poly.degree * poly.magnitude_bound(pt.coords)
        row = np.array([d(pt.coords) for d in grad])
        rows.append(row / scale if scale > 0 else row)
    return float(scipy.linalg.svdvals(np.array(rows))[-1])


@dataclass(frozen=True)
class TransversalityReport:
    """Separation, Jacobian and reality findings for an intersection point list."""

    point_count: int
    min_distance: float
    jacobian_singular_values: tuple[float, ...]
    real_flags: tuple[bool, ...]
    separation_tol: float = DEFAULT_SEPARATION_TOL
    jacobian_tol: float = DEFAULT_JACOBIAN_TOL
    duplicate_pairs: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    @property
    def min_jacobian(self) -> float:
        return min(self.jacobian_singular_values, default=float("inf"))

    @property
    def separated(self) -> bool:
        return self.min_distance > self.separation_tol

    @property
    def nonsingular(self) -> bool:
        return self.min_jacobian > self.jacobian_tol

    @property
    def has_real_points(self) -> bool:
        return any(self.real_flags)

    @property
    def passed(self) -> bool:
        return self.separated and self.nonsingular and not self.has_real_points

    def failures(self) -> list[str]:
        reasons = []
        if not self.separated:
            reasons.append(
                f"points not separated (min distance {self.min_distance:.3e}, "
                f"duplicates {list(self.duplicate_pairs)})"
            )
        if not self.nonsingular:
            reasons.append(f"near-singular Jacobian (smallest {self.min_jacobian:.3e})")
        if self.has_real_points:
            real = [k for k, flag in enumerate(self.real_flags) if flag]
            reasons.append(f"real intersection points at indices {real}")
        return reasons


def check_transverse(
    f: HomogeneousPoly,
    g: HomogeneousPoly,
    points: Sequence[ProjectivePoint],
    separation_tol: float = DEFAULT_SEPARATION_TOL,
    jacobian_tol: float = DEFAULT_JACOBIAN_TOL,
    real_tol: float = DEFAULT_POINT_REAL_TOL,
) -> TransversalityReport:
    """Pure report; the caller decides what a failure means."""
    grads = (gradient(f), gradient(g)) if f.degree > 0 and g.degree > 0 else None
    duplicates = []
    min_dist = float("inf")
    for a in range(len(points)):
        for b in range(a + 1, len(points)):
            dist = chordal_distance(points[a], points[b])
            min_dist = min(min_dist, dist)
            if dist <= separation_tol:
                duplicates.append((a, b))
    jac = (
        tuple(jacobian_singular_value(f, g, p, grads) for p in points)
        if grads is not None
        else tuple(0.0 for _ in points)
    )
    return TransversalityReport(
        point_count=len(points),
        min_distance=min_dist,
        jacobian_singular_values=jac,
        real_flags=tuple(p.is_real(real_tol) for p in points),
        separation_tol=separation_tol,
        jacobian_tol=jacobian_tol,
        duplicate_pairs=tuple(duplicates),
    )
