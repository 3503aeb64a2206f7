"""Basis of traceless hermitian 3x3 matrices and the su(3) tensor algebra.

The eight basis matrices ``lambda_1 .. lambda_8`` satisfy

    tr(lambda_j lambda_k) = 2 delta_jk,
    lambda_j lambda_k = (2/3) delta_jk + d_jkl lambda_l + i f_jkl lambda_l,

with ``f`` totally antisymmetric and ``d`` totally symmetric.  Both tensors
are computed from the trace formulas rather than transcribed, so the familiar
table of nonzero components is available as an independent oracle in the
test suite.

A density matrix is coordinatized by a real 8-vector ``n`` through

    rho(n) = (1/3) (I + sqrt(3) n.lambda),

and the symmetric invariant of su(3) enters through the star product

    (n * m)_l = sqrt(3) d_jkl n_j m_k,

the unique symmetric bilinear extension of the quadratic map n -> n * n.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

# Tolerance for algebraic identities evaluated on exactly representable
# inputs (all constants here are short combinations of 1, 1/2, sqrt(3)).
TAU_NUM = 1e-12
# Tolerance for hermiticity / unit-trace validation of matrix inputs.
TAU_SYM = 1e-12

SQRT3 = np.sqrt(3.0)


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@functools.lru_cache(maxsize=1)
def gellmann_basis() -> tuple[np.ndarray, ...]:
    """The eight basis matrices, as read-only complex arrays."""
    l1 = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=complex)
    l2 = np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]], dtype=complex)
    l3 = np.array([[1, 0, 0], [0, -1, 0], [0, 0, 0]], dtype=complex)
    l4 = np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0]], dtype=complex)
    l5 = np.array([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]], dtype=complex)
    l6 = np.array([[0, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=complex)
    l7 = np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]], dtype=complex)
    l8 = np.array([[1, 0, 0], [0, 1, 0], [0, 0, -2]], dtype=complex) / SQRT3
    return tuple(_frozen(m) for m in (l1, l2, l3, l4, l5, l6, l7, l8))


@functools.lru_cache(maxsize=1)
def basis_stack() -> np.ndarray:
    """All eight basis matrices stacked into a read-only (8, 3, 3) array."""
    return _frozen(np.stack(gellmann_basis()))


@dataclass(frozen=True)
class StructureConstants:
    """The antisymmetric f and symmetric d tensors, shape (8, 8, 8) each."""

    f: np.ndarray
    d: np.ndarray


@functools.lru_cache(maxsize=1)
def structure_constants() -> StructureConstants:
    """Compute f and d from the trace formulas.

    f_jkl = (1/4i) tr([lambda_j, lambda_k] lambda_l)
    d_jkl = (1/4)  tr({lambda_j, lambda_k} lambda_l)
    """
    lam = basis_stack()
    # t[j, k, l] = tr(lambda_j lambda_k lambda_l)
    t = np.einsum("jab,kbc,lca->jkl", lam, lam, lam)
    ts = t.transpose(1, 0, 2)
    f = (t - ts) / 4j
    d = (t + ts) / 4
    if np.abs(f.imag).max() > TAU_NUM or np.abs(d.imag).max() > TAU_NUM:
        raise AssertionError("structure constants acquired an imaginary part")
    return StructureConstants(f=_frozen(f.real.copy()), d=_frozen(d.real.copy()))


def star(n: np.ndarray, m: np.ndarray) -> np.ndarray:
    """Symmetric bilinear star product, (n * m)_l = sqrt(3) d_jkl n_j m_k.

    Accepts batched inputs of shape (..., 8).
    """
    d = structure_constants().d
    return SQRT3 * np.einsum("jkl,...j,...k->...l", d, n, m)


def n_dot_lambda(n: np.ndarray) -> np.ndarray:
    """Contraction sum_j n_j lambda_j; batched over leading axes."""
    return np.einsum("...j,jab->...ab", np.asarray(n), basis_stack())


def bloch_to_density(n: np.ndarray) -> np.ndarray:
    """rho(n) = (1/3)(I + sqrt(3) n.lambda)."""
    return (np.eye(3, dtype=complex) + SQRT3 * n_dot_lambda(n)) / 3.0


def density_to_bloch(rho: np.ndarray) -> np.ndarray:
    """Invert the coordinatization: n_k = (sqrt(3)/2) tr(rho lambda_k).

    Raises ValueError when rho is not hermitian with unit trace.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {rho.shape}")
    if np.abs(rho - rho.conj().T).max() > TAU_SYM:
        raise ValueError("matrix is not hermitian")
    tr = np.trace(rho)
    if abs(tr - 1.0) > TAU_SYM:
        raise ValueError(f"not a density matrix: trace = {tr}, expected 1")
    lam = basis_stack()
    return (SQRT3 / 2.0) * np.einsum("ab,kba->k", rho, lam).real


def square_identity_check(n: np.ndarray) -> float:
    """Residual of (n.lambda)^2 = (2/3) n.n + (1/sqrt(3)) (n*n).lambda.

    Returns the max-norm of the difference; a self-test that must stay
    below TAU_NUM for every real 8-vector.
    """
    n = np.asarray(n, dtype=float)
    a = n_dot_lambda(n)
    rhs = (2.0 / 3.0) * float(n @ n) * np.eye(3) + n_dot_lambda(star(n, n)) / SQRT3
    return float(np.abs(a @ a - rhs).max())
