# ABOUTME: Sampled hyperbolicity and interlacing tests along real lines through e, plus the definiteness check.
# ABOUTME: A failure comes with a witness point; a pass is evidence, not a certificate.

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Protocol

import numpy as np

from hyperdet.common.config.constants import (
    DEFAULT_HYPERBOLICITY_TOL,
    DEFAULT_HYPERBOLICITY_TRIALS,
    DEFAULT_INTERLACING_SLACK,
)
from hyperdet.errors import DegreeMismatchError, InvalidInputError, VanishingLeadingCoefficientError
from hyperdet.numerics.linalg import DefinitenessResult, is_positive_definite
from hyperdet.numerics.roots import univariate_roots
from hyperdet.poly.homogeneous import HomogeneousPoly, change_coords

if TYPE_CHECKING:
    from collections.abc import Sequence

    from numpy.typing import ArrayLike

    from hyperdet.detrep.pencil import HermitianPencil


class HasPencil(Protocol):
    @property
    def pencil(self) -> HermitianPencil: ...


@dataclass(frozen=True)
class HyperbolicityResult:
    is_hyperbolic: bool
    worst_imaginary: float
    witness: tuple[float, float, float] | None = None

    def __bool__(self) -> bool:
        return self.is_hyperbolic


@dataclass(frozen=True)
class InterlacingResult:
    is_interlacing: bool
    witness: tuple[float, float, float] | None = None

    def __bool__(self) -> bool:
        return self.is_interlacing


def _direction(e: ArrayLike) -> np.ndarray:
    arr = np.asarray(e, dtype=np.float64).reshape(-1)
    if arr.shape[0] != 3 or not np.any(arr):
        raise InvalidInputError(f"Direction must be a non-zero 3-vector; got {e}")
    return arr


def restrict_to_line(f: HomogeneousPoly, e: ArrayLike, p: ArrayLike) -> np.ndarray:
    """Ascending coefficients of t -> f(t*e + p), by an exact change of coordinates."""
    direction = _direction(e)
    point = np.asarray(p, dtype=np.float64).reshape(-1)
    third = np.cross(direction, point)
    if not np.any(third):
        raise InvalidInputError("Line point must not be parallel to the direction")
    # columns e, p, e x p: q(t, s, w) = f(t e + s p + w (e x p))
    q = change_coords(f, np.column_stack([direction, point, third]))
    return np.array([q.coefficient((a, f.degree - a, 0)) for a in range(f.degree + 1)])


def _sample_points(
    trials: int, seed: int | None, points: Sequence[ArrayLike] | None
) -> list[np.ndarray]:
    if points is not None:
        return [np.asarray(p, dtype=np.float64).reshape(-1) for p in points]
    rng = np.random.default_rng(seed)
    return list(rng.standard_normal((trials, 3)))


def _witness(p: np.ndarray) -> tuple[float, float, float]:
    return (float(p[0]), float(p[1]), float(p[2]))


def hyperbolicity_check(
    f: HomogeneousPoly,
    e: ArrayLike,
    trials: int = DEFAULT_HYPERBOLICITY_TRIALS,
    seed: int | None = 0,
    tol: float = DEFAULT_HYPERBOLICITY_TOL,
    points: Sequence[ArrayLike] | None = None,
) -> HyperbolicityResult:
    """Real-rootedness of t -> f(t*e + p) for sampled real p (e is normalised first)."""
    if not f.is_real():
        raise InvalidInputError("Hyperbolicity is defined for real polynomials")
    direction = _direction(e)
    direction = direction / np.linalg.norm(direction)
    if abs(f(direction)) <= 1e-14 * max(f.max_abs_coeff(), 1e-300):
        raise InvalidInputError("f vanishes at the direction")
    worst = 0.0
    for p in _sample_points(trials, seed, points):
        roots = univariate_roots(restrict_to_line(f, direction, p))
        measure = float(np.max(np.abs(roots.imag) / (1.0 + np.abs(roots)), initial=0.0))
        worst = max(worst, measure)
        if measure > tol:
            return HyperbolicityResult(False, worst, _witness(p))
    return HyperbolicityResult(True, worst)


def interlacing_check(
    f: HomogeneousPoly,
    g: HomogeneousPoly,
    e: ArrayLike,
    trials: int = DEFAULT_HYPERBOLICITY_TRIALS,
    seed: int | None = 0,
    slack: float = DEFAULT_INTERLACING_SLACK,
    points: Sequence[ArrayLike] | None = None,
    imag_tol: float = DEFAULT_HYPERBOLICITY_TOL,
) -> InterlacingResult:
    """Weak interlacing of the roots of g(t*e + p) and f(t*e + p) on sampled lines."""
    if g.degree != f.degree - 1:
        raise DegreeMismatchError(f"Interlacer must have degree {f.degree - 1}; got {g.degree}")
    direction = _direction(e)
    direction = direction / np.linalg.norm(direction)
    for p in _sample_points(trials, seed, points):
        try:
            f_roots = univariate_roots(restrict_to_line(f, direction, p))
            g_roots = univariate_roots(restrict_to_line(g, direction, p))
        except VanishingLeadingCoefficientError:
            return InterlacingResult(False, _witness(p))
        if any(np.abs(r.imag) > imag_tol * (1.0 + np.abs(r)) for r in (*f_roots, *g_roots)):
            return InterlacingResult(False, _witness(p))
        fr = np.sort(f_roots.real)
        gr = np.sort(g_roots.real)
        allowance = slack * max(float(fr[-1] - fr[0]) if fr.size else 0.0, 1.0)
        for k, root in enumerate(gr):
            if root < fr[k] - allowance or root > fr[k + 1] + allowance:
                return InterlacingResult(False, _witness(p))
    return InterlacingResult(True)


def check_definite(rep: HasPencil, e: ArrayLike) -> DefinitenessResult:
    return is_positive_definite(rep.pencil.evaluate(_direction(e)))
