# ABOUTME: Random hyperbolic test instances det(x*I + y*(B + B^T) + z*(C + C^T)) with normal B, C.
# ABOUTME: Gaussian draws use Box-Muller over the PCG64 uniform stream so instances are reproducible.

from __future__ import annotations

import numpy as np

from hyperdet.common.config.constants import GENERATOR_MEAN, GENERATOR_STD
from hyperdet.detrep.pencil import HermitianPencil
from hyperdet.errors import InvalidInputError
from hyperdet.poly.homogeneous import HomogeneousPoly
from hyperdet.verify.interpolation import fit_determinant


def gaussian(
    rng: np.random.Generator,
    shape: tuple[int, ...],
    mean: float = GENERATOR_MEAN,
    std: float = GENERATOR_STD,
) -> np.ndarray:
    """Normal draws from pairs of uniforms: r*cos(2 pi u2), r*sin(2 pi u2), r = sqrt(-2 ln(1 - u1))."""
    count = int(np.prod(shape))
    pairs = (count + 1) // 2
    u1 = rng.random(pairs)
    u2 = rng.random(pairs)
    radius = np.sqrt(-2.0 * np.log1p(-u1))
    angle = 2.0 * np.pi * u2
    normals = np.column_stack([radius * np.cos(angle), radius * np.sin(angle)]).reshape(-1)
    return mean + std * normals[:count].reshape(shape)


def random_pencil(d: int, seed: int | None = 0) -> HermitianPencil:
    """[I, B + B^T, C + C^T] with B, C entries drawn N(mean 1, std 0.5)."""
    if d < 1:
        raise InvalidInputError(f"Degree must be at least 1; got {d}")
    rng = np.random.Generator(np.random.PCG64(seed))
    b = gaussian(rng, (d, d))
    c = gaussian(rng, (d, d))
    return HermitianPencil(np.array([np.eye(d), b + b.T, c + c.T]))


def generate_random_hyperbolic(d: int, seed: int | None = 0) -> HomogeneousPoly:
    """Real form det(pencil), hyperbolic with respect to (1, 0, 0) and monic in x."""
    fit = fit_determinant(random_pencil(d, seed), seed)
    return HomogeneousPoly(d, fit.poly.coeffs.real)
