# ABOUTME: Determinantal representation stages: vanishing basis, linear system, solve and pipeline.

from hyperdet.detrep.basis import VanishingBasis, extend_to_basis, vanishing_space
from hyperdet.detrep.models import (
    BasisDocument,
    RepresentationDocument,
    StoredRepresentation,
    load_basis_entries,
    load_representation,
)
from hyperdet.detrep.pencil import HermitianPencil, parameter_count, parameter_index
from hyperdet.detrep.pipeline import (
    Representation,
    RepresentOptions,
    StageTimings,
    normalize_representation,
    represent,
    scale_constant,
)
from hyperdet.detrep.system import LinearSystem, assemble_system, solve_system

__all__ = [
    "BasisDocument",
    "HermitianPencil",
    "LinearSystem",
    "RepresentOptions",
    "Representation",
    "RepresentationDocument",
    "StageTimings",
    "StoredRepresentation",
    "VanishingBasis",
    "assemble_system",
    "extend_to_basis",
    "load_basis_entries",
    "load_representation",
    "normalize_representation",
    "parameter_count",
    "parameter_index",
    "represent",
    "scale_constant",
    "solve_system",
    "vanishing_space",
]
