# ABOUTME: Integration-test fixtures for hyperdet.
# ABOUTME: Seeded random hyperbolic instances shared by the end-to-end acceptance tests.

import pytest

from hyperdet.cli.generator import generate_random_hyperbolic
from hyperdet.poly.homogeneous import HomogeneousPoly


@pytest.fixture
def random_instance():
    """Factory: the generated degree-d form for a given seed."""

    def _make(d: int, seed: int = 0) -> HomogeneousPoly:
        return generate_random_hyperbolic(d, seed)

    return _make
