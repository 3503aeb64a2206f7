"""Seeded random samplers used by the verification suites.

All samplers take an explicit generator so that every Monte Carlo check in
the test suite and the CLI is reproducible from a single integer seed.
"""

from __future__ import annotations

import numpy as np

from .gellmann import basis_stack


def rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def unit_directions(gen: np.random.Generator, count: int, dim: int = 8) -> np.ndarray:
    """Uniform points on the unit sphere, shape (count, dim)."""
    x = gen.standard_normal((count, dim))
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def ball_points(gen: np.random.Generator, count: int, dim: int = 8) -> np.ndarray:
    """Uniform points in the unit ball: unit direction times U^(1/dim)."""
    u = unit_directions(gen, count, dim)
    radii = gen.random(count) ** (1.0 / dim)
    return u * radii[:, None]


def pure_state_bloch(gen: np.random.Generator, count: int) -> np.ndarray:
    """Coordinates of random rank-1 projectors, shape (count, 8).

    A unit vector in C^3 is drawn from the normalized complex Gaussian,
    projected, and coordinatized by n_k = (sqrt(3)/2) tr(rho lambda_k).
    """
    psi = gen.standard_normal((count, 3)) + 1j * gen.standard_normal((count, 3))
    psi /= np.linalg.norm(psi, axis=1, keepdims=True)
    rho = np.einsum("ba,bc->bac", psi, psi.conj())
    lam = basis_stack()
    return (np.sqrt(3.0) / 2.0) * np.einsum("bac,kca->bk", rho, lam).real


def special_unitary(gen: np.random.Generator) -> np.ndarray:
    """A Haar-ish random element of SU(3) via QR with phase fixing."""
    z = gen.standard_normal((3, 3)) + 1j * gen.standard_normal((3, 3))
    q, r = np.linalg.qr(z)
    q = q * (np.diagonal(r) / np.abs(np.diagonal(r)))
    det = np.linalg.det(q)
    return q / det ** (1.0 / 3.0)
