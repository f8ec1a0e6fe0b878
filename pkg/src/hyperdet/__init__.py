# ABOUTME: hyperdet: definite Hermitian determinantal representations of hyperbolic ternary forms.
# ABOUTME: Public API re-exports the pipeline entry points and the main data types.

from hyperdet.detrep import (
    HermitianPencil,
    Representation,
    RepresentOptions,
    VanishingBasis,
    normalize_representation,
    represent,
    scale_constant,
)
from hyperdet.errors import HyperdetError
from hyperdet.intersect import IntersectionSet, ProjectivePoint, compute_intersection_set
from hyperdet.poly import HomogeneousPoly, directional_derivative, format_polynomial, parse_polynomial
from hyperdet.verify import (
    ErrorReport,
    hyperbolicity_check,
    interlacing_check,
    interpolate_determinant,
    representation_error,
)

__all__ = [
    "ErrorReport",
    "HermitianPencil",
    "HomogeneousPoly",
    "HyperdetError",
    "IntersectionSet",
    "ProjectivePoint",
    "RepresentOptions",
    "Representation",
    "VanishingBasis",
    "compute_intersection_set",
    "directional_derivative",
    "format_polynomial",
    "hyperbolicity_check",
    "interlacing_check",
    "interpolate_determinant",
    "normalize_representation",
    "parse_polynomial",
    "represent",
    "representation_error",
    "scale_constant",
]
