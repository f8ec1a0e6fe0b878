# ABOUTME: IntersectionSet and the conjugate split S | conj(S) of an intersection point list.
# ABOUTME: compute_intersection_set runs intersection, transversality gate and split in one call.

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

from hyperdet.common.config.hyperdet_settings import HyperdetSettings, get_hyperdet_settings
from hyperdet.common.observability.logging_utils import get_logger
from hyperdet.errors import InvalidInputError, PairingError, TransversalityError
from hyperdet.intersect.curves import intersect_curves
from hyperdet.intersect.points import ProjectivePoint, check_transverse, point_residual

if TYPE_CHECKING:
    from collections.abc import Sequence

    from numpy.typing import ArrayLike

    from hyperdet.poly.homogeneous import HomogeneousPoly

logger = get_logger(__name__)


@dataclass(frozen=True)
class IntersectionDiagnostics:
    min_distance: float = float("inf")
    max_residual: float = 0.0
    min_jacobian: float = float("inf")
    direction: tuple[float, float, float] | None = None
    supplied: bool = False
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True)
class IntersectionSet:
    """All intersection points, the indices of S and the conjugation involution.

    pairing[k] is the index of the conjugate of point k, or -1 when a supplied point
    set has no match for it.
    """

    points: tuple[ProjectivePoint, ...]
    s_indices: tuple[int, ...]
    pairing: tuple[int, ...]
    diagnostics: IntersectionDiagnostics = field(default_factory=IntersectionDiagnostics)

    @property
    def s_points(self) -> list[ProjectivePoint]:
        return [self.points[k] for k in self.s_indices]

    @property
    def conjugate_indices(self) -> list[int]:
        return [self.pairing[k] for k in self.s_indices]

    def __len__(self) -> int:
        return len(self.points)


def _first_nonreal_sign(pt: ProjectivePoint, real_tol: float) -> int:
    for c in pt.coords:
        if abs(c.imag) > real_tol:
            return 1 if c.imag > 0 else -1
    return 0


def _match_conjugates(points: Sequence[ProjectivePoint], pair_tol: float) -> list[int]:
    """Greedy involution; raises PairingError when some point has no partner within pair_tol."""
    n = len(points)
    pairing = [-1] * n
    for i in range(n):
        if pairing[i] >= 0:
            continue
        target = np.conj(points[i].coords)
        best_j, best_dist = -1, float("inf")
        for j in range(n):
            if j == i or pairing[j] >= 0:
                continue
            dist = float(np.max(np.abs(points[j].coords - target)))
            if dist < best_dist:
                best_j, best_dist = j, dist
        if best_j < 0 or best_dist > pair_tol:
            raise PairingError(
                f"Point {i} {points[i]} has no conjugate partner "
                f"(closest distance {best_dist:.3e} > {pair_tol:.1e})"
            )
        pairing[i], pairing[best_j] = best_j, i
    return pairing


def split_conjugate(
    points: Sequence[ProjectivePoint],
    pair_tol: float | None = None,
    real_tol: float | None = None,
    diagnostics: IntersectionDiagnostics | None = None,
) -> IntersectionSet:
    """Pair every point with its conjugate and choose one point per pair for S.

    The representative is the point whose first coordinate with |Im| > real_tol has
    positive imaginary part; a real point listed twice is paired with its copy and
    the earlier index goes to S.
    """
    settings = get_hyperdet_settings()
    pair_tol = settings.pair_tol if pair_tol is None else pair_tol
    real_tol = settings.point_real_tol if real_tol is None else real_tol
    if len(points) % 2:
        raise PairingError(f"An odd number of points ({len(points)}) cannot split into conjugate pairs")

    pairing = _match_conjugates(points, pair_tol)
    s_indices = []
    for i, j in enumerate(pairing):
        if i > j:
            continue
        sign_i = _first_nonreal_sign(points[i], real_tol)
        sign_j = _first_nonreal_sign(points[j], real_tol)
        if sign_i > 0 or (sign_i == 0 and sign_j <= 0):
            s_indices.append(i)
        else:
            s_indices.append(j)
    return IntersectionSet(
        points=tuple(points),
        s_indices=tuple(sorted(s_indices)),
        pairing=tuple(pairing),
        diagnostics=diagnostics or IntersectionDiagnostics(),
    )


def supplied_intersection_set(
    points: Sequence[ProjectivePoint | ArrayLike],
    s_indices: Sequence[int] | None = None,
    pair_tol: float | None = None,
) -> IntersectionSet:
    """IntersectionSet from caller data, trusted without transversality checks.

    With s_indices None the split is computed. Otherwise the given S is kept and the
    conjugate pairing is filled in where possible.
    """
    pts = [p if isinstance(p, ProjectivePoint) else ProjectivePoint.from_coords(p) for p in points]
    warnings = ["intersection points supplied by caller; transversality not checked"]
    if s_indices is None:
        result = split_conjugate(pts, pair_tol=pair_tol)
        diagnostics = IntersectionDiagnostics(supplied=True, warnings=tuple(warnings))
        return IntersectionSet(result.points, result.s_indices, result.pairing, diagnostics)

    chosen = [int(k) for k in s_indices]
    if len(set(chosen)) != len(chosen) or any(not 0 <= k < len(pts) for k in chosen):
        raise InvalidInputError(f"S indices {chosen} are not distinct indices into {len(pts)} points")
    try:
        pairing = tuple(_match_conjugates(pts, get_hyperdet_settings().pair_tol if pair_tol is None else pair_tol))
    except PairingError as e:
        warnings.append(f"conjugate pairing incomplete: {e.detail}")
        pairing = tuple(-1 for _ in pts)
    logger.warning(warnings[-1])
    return IntersectionSet(
        points=tuple(pts),
        s_indices=tuple(chosen),
        pairing=pairing,
        diagnostics=IntersectionDiagnostics(supplied=True, warnings=tuple(warnings)),
    )


def compute_intersection_set(
    f: HomogeneousPoly,
    g: HomogeneousPoly,
    e: ArrayLike | None = None,
    seed: int | None = 0,
    settings: HyperdetSettings | None = None,
) -> IntersectionSet:
    """Intersect, gate on transversality and non-reality, then split.

    Raises:
        TransversalityError: On coincident, singular or real intersection points.
        PairingError: When the points are not conjugate-closed to pair_tol.
    """
    settings = settings or get_hyperdet_settings()
    points = intersect_curves(f, g, seed=seed, settings=settings)
    report = check_transverse(
        f,
        g,
        points,
        separation_tol=settings.separation_tol,
        jacobian_tol=settings.jacobian_tol,
        real_tol=settings.point_real_tol,
    )
    if not report.passed:
        raise TransversalityError("Intersection rejected: " + "; ".join(report.failures()))

    direction = None
    if e is not None:
        arr = np.asarray(e, dtype=np.float64).reshape(-1)
        direction = (float(arr[0]), float(arr[1]), float(arr[2]))
    diagnostics = IntersectionDiagnostics(
        min_distance=report.min_distance,
        max_residual=max((point_residual(f, g, p) for p in points), default=0.0),
        min_jacobian=report.min_jacobian,
        direction=direction,
    )
    result = split_conjugate(
        points,
        pair_tol=settings.pair_tol,
        real_tol=settings.point_real_tol,
        diagnostics=diagnostics,
    )
    logger.info(f"Split {len(points)} intersection points into |S| = {len(result.s_indices)}")
    return result
