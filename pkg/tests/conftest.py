# ABOUTME: Pytest fixtures shared by the hyperdet unit and integration tests.
# ABOUTME: Provides the worked quartic with two nodes (points, basis, pencil) and the conic x^2 - y^2 - z^2.

from collections.abc import Generator
from pathlib import Path

import numpy as np
import pytest

from hyperdet.common.config.hyperdet_settings import set_hyperdet_settings
from hyperdet.detrep.basis import VanishingBasis
from hyperdet.detrep.pencil import HermitianPencil
from hyperdet.intersect.split import IntersectionSet, supplied_intersection_set
from hyperdet.poly.homogeneous import HomogeneousPoly
from hyperdet.poly.parser import parse_polynomial

SQRT3 = float(np.sqrt(3.0))

QUARTIC_TEXT = "x^4 - 4x^2y^2 + y^4 - 4x^2z^2 - 2y^2z^2 + z^4"
CONIC_TEXT = "x^2 - y^2 - z^2"

# a11 = (1/4) D_e f for e = (1, 0, 0); a12..a14 complete a basis of the cubics vanishing on S
QUARTIC_BASIS_TEXT = (
    "x^3 - 2xy^2 - 2xz^2",
    "ix^3 + 4ixy^2 - 4x^2z - 4y^2z + 4z^3",
    "-3ix^3 + 4x^2y + 4ixy^2 - 4y^3 + 4yz^2",
    "-x^3 - 2ix^2y - 2ix^2z + 4xyz",
)

QUARTIC_S = (
    (0.0, 1.0, 1.0),
    (0.0, -1.0, 1.0),
    (2.0, SQRT3, 1j),
    (2.0, -SQRT3, 1j),
    (2.0, 1j, SQRT3),
    (2.0, 1j, -SQRT3),
)

# (1/8) * [[14x, 2z, 2ix - 2y, 2i(y - z)], [2z, x, 0, -ix + 2y],
#          [-2ix - 2y, 0, x, ix - 2z], [-2i(y - z), ix + 2y, -ix - 2z, 4x]]
QUARTIC_M1 = np.array(
    [[14, 0, 2j, 0], [0, 1, 0, -1j], [-2j, 0, 1, 1j], [0, 1j, -1j, 4]], dtype=np.complex128
) / 8
QUARTIC_M2 = np.array(
    [[0, 0, -2, 2j], [0, 0, 0, 2], [-2, 0, 0, 0], [-2j, 2, 0, 0]], dtype=np.complex128
) / 8
QUARTIC_M3 = np.array(
    [[0, 2, 0, -2j], [2, 0, 0, 0], [0, 0, 0, -2], [2j, 0, -2, 0]], dtype=np.complex128
) / 8

# the conic under a = (2x, y + iz)
CONIC_M1 = np.diag([0.5, 2.0]).astype(np.complex128)
CONIC_M2 = np.array([[0, -1], [-1, 0]], dtype=np.complex128)
CONIC_M3 = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs" / "example_quartic"


@pytest.fixture(autouse=True)
def _reset_settings(monkeypatch) -> Generator[None, None, None]:
    """Every test starts from default settings, whatever HYPERDET_* says outside."""
    for name in ("HYPERDET_THREADS", "HYPERDET_MAX_RETRIES", "HYPERDET_NULLSPACE_TOL"):
        monkeypatch.delenv(name, raising=False)
    set_hyperdet_settings(None)
    yield
    set_hyperdet_settings(None)


@pytest.fixture
def quartic() -> HomogeneousPoly:
    return parse_polynomial(QUARTIC_TEXT)


@pytest.fixture
def conic() -> HomogeneousPoly:
    return parse_polynomial(CONIC_TEXT)


@pytest.fixture
def quartic_basis_entries() -> list[HomogeneousPoly]:
    return [parse_polynomial(text) for text in QUARTIC_BASIS_TEXT]


@pytest.fixture
def quartic_points() -> IntersectionSet:
    """S followed by its conjugates; the nodes therefore appear twice."""
    s = [np.array(p, dtype=np.complex128) for p in QUARTIC_S]
    return supplied_intersection_set([*s, *(np.conj(p) for p in s)], s_indices=range(6))


@pytest.fixture
def quartic_basis(quartic_basis_entries, quartic_points) -> VanishingBasis:
    return VanishingBasis.from_supplied(quartic_basis_entries, quartic_points.s_points)


@pytest.fixture
def quartic_pencil() -> HermitianPencil:
    return HermitianPencil.from_matrices(QUARTIC_M1, QUARTIC_M2, QUARTIC_M3)


@pytest.fixture
def conic_pencil() -> HermitianPencil:
    return HermitianPencil.from_matrices(CONIC_M1, CONIC_M2, CONIC_M3)


@pytest.fixture
def config_dir() -> Path:
    return CONFIG_DIR
