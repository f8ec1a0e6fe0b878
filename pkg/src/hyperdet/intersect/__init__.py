# ABOUTME: Intersection of V(f) and V(g), transversality diagnostics and the conjugate split.

from hyperdet.intersect.curves import RefinedPoint, intersect_curves, perturb_direction, refine_point
from hyperdet.intersect.models import PointSetDocument, load_point_set
from hyperdet.intersect.points import (
    ProjectivePoint,
    TransversalityReport,
    check_transverse,
    chordal_distance,
    point_residual,
)
from hyperdet.intersect.split import (
    IntersectionDiagnostics,
    IntersectionSet,
    compute_intersection_set,
    split_conjugate,
    supplied_intersection_set,
)

__all__ = [
    "IntersectionDiagnostics",
    "IntersectionSet",
    "PointSetDocument",
    "ProjectivePoint",
    "RefinedPoint",
    "TransversalityReport",
    "check_transverse",
    "chordal_distance",
    "compute_intersection_set",
    "intersect_curves",
    "load_point_set",
    "perturb_direction",
    "point_residual",
    "refine_point",
    "split_conjugate",
    "supplied_intersection_set",
]
