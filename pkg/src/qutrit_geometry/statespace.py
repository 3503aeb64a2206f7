"""Closed-form characterization of the qutrit state space in R^8.

With t = n.n and c(n) = (n*n).n (the quadratic and cubic invariants),
the state space, its boundary, and the extremal set are

    body:      3 t - 2 c(n) <= 1  and  t <= 1,
    boundary:  3 t - 2 c(n)  = 1  and  t <= 1,
    extremal:  t = 1  and  n * n = n.

The boundary is pinched between two spheres: along any unit direction u
the boundary radius r solves 3 r^2 - 2 c(u) r^3 = 1 and always lies in
[1/2, 1], with r = 1 exactly on extremal directions.  Pure directions n
and their opposites -n/2 are both boundary points ("dual pairs"), and the
radius-1/sqrt(3) sphere is self-dual (boundary points come in antipodal
pairs).

An independent verification channel is provided by `eigen_oracle`, which
computes the eigenvalues of the explicit matrix n.lambda by the closed-form
trigonometric method for 3x3 hermitian matrices, without touching the f/d
tensors.  A third, equivalent route is `charpoly_positive`: with
P(y) = det(yI + H), positivity of I + H is equivalent to
P(1) >= 0, P'(1) >= 0, P''(1) >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gellmann import SQRT3, TAU_NUM, TAU_SYM, bloch_to_density, star

# Membership tolerance: boundary predicates compound several arithmetic
# operations, so this is looser than TAU_NUM.  Absolute tolerance on the
# cubic residual (the residual is O(1)-scaled on the unit ball).
TAU_MEM = 1e-9


# ---------------------------------------------------------------------------
# Explicit coefficient matrix and its eigenvalues, independent of f/d
# ---------------------------------------------------------------------------

def bloch_matrix(n: np.ndarray) -> np.ndarray:
    """The matrix n.lambda written out entry by entry; batched over (..., 8)."""
    n = np.asarray(n, dtype=float)
    n1, n2, n3, n4 = n[..., 0], n[..., 1], n[..., 2], n[..., 3]
    n5, n6, n7, n8 = n[..., 4], n[..., 5], n[..., 6], n[..., 7]
    w = n8 / SQRT3
    out = np.empty(n.shape[:-1] + (3, 3), dtype=complex)
    out[..., 0, 0] = n3 + w
    out[..., 0, 1] = n1 - 1j * n2
    out[..., 0, 2] = n4 - 1j * n5
    out[..., 1, 0] = n1 + 1j * n2
    out[..., 1, 1] = -n3 + w
    out[..., 1, 2] = n6 - 1j * n7
    out[..., 2, 0] = n4 + 1j * n5
    out[..., 2, 1] = n6 + 1j * n7
    out[..., 2, 2] = -2.0 * w
    return out


def _det3(a: np.ndarray) -> np.ndarray:
    """Cofactor-expansion determinant of a batch of 3x3 matrices."""
    return (
        a[..., 0, 0] * (a[..., 1, 1] * a[..., 2, 2] - a[..., 1, 2] * a[..., 2, 1])
        - a[..., 0, 1] * (a[..., 1, 0] * a[..., 2, 2] - a[..., 1, 2] * a[..., 2, 0])
        + a[..., 0, 2] * (a[..., 1, 0] * a[..., 2, 1] - a[..., 1, 1] * a[..., 2, 0])
    )


def eigenvalues_batch(n: np.ndarray) -> np.ndarray:
    """Sorted eigenvalues of n.lambda via the trigonometric closed form.

    For traceless hermitian A with p = sqrt(tr(A^2)/6) and
    r = det(A)/(2 p^3) in [-1, 1], the eigenvalues are
    2 p cos(phi + 2 pi k / 3), phi = arccos(r)/3.  Batched over (..., 8).
    """
    n = np.asarray(n, dtype=float)
    a = bloch_matrix(n)
    # tr(A^2) = 2 n.n for this basis, but compute it from the matrix to keep
    # this channel independent of the tensor algebra.
    tr2 = np.einsum("...ab,...ba->...", a, a).real
    p = np.sqrt(np.maximum(tr2 / 6.0, 0.0))
    det = _det3(a).real
    safe_p = np.where(p > 0.0, p, 1.0)
    r = np.clip(det / (2.0 * safe_p**3), -1.0, 1.0)
    phi = np.arccos(r) / 3.0
    mu_hi = 2.0 * p * np.cos(phi)
    mu_lo = 2.0 * p * np.cos(phi + 2.0 * np.pi / 3.0)
    mu_mid = -mu_hi - mu_lo
    return np.stack([mu_lo, mu_mid, mu_hi], axis=-1)


@dataclass(frozen=True)
class EigenTriple:
    """Sorted eigenvalues mu1 <= mu2 <= mu3 of the traceless matrix n.lambda."""

    mu1: float
    mu2: float
    mu3: float

    def as_array(self) -> np.ndarray:
        return np.array([self.mu1, self.mu2, self.mu3])

    @property
    def norm(self) -> float:
        """|n| recovered from the eigenvalues, sqrt(tr((n.lambda)^2) / 2)."""
        return float(np.sqrt((self.mu1**2 + self.mu2**2 + self.mu3**2) / 2.0))


def eigen_oracle(n: np.ndarray) -> EigenTriple:
    """Eigenvalues of n.lambda, independent of the f/d tensor route.

    rho(n) >= 0 exactly when all three values are >= -1/sqrt(3) (up to
    numerical tolerance).
    """
    mu = eigenvalues_batch(np.asarray(n, dtype=float))
    return EigenTriple(float(mu[0]), float(mu[1]), float(mu[2]))


# ---------------------------------------------------------------------------
# Membership predicates
# ---------------------------------------------------------------------------

def invariants(n: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(t, c) = (n.n, (n*n).n); batched over (..., 8)."""
    n = np.asarray(n, dtype=float)
    t = np.einsum("...j,...j->...", n, n)
    c = np.einsum("...j,...j->...", star(n, n), n)
    return t, c


def boundary_residual(n: np.ndarray) -> np.ndarray:
    """3 n.n - 2 (n*n).n - 1; zero on the boundary surface."""
    t, c = invariants(n)
    return 3.0 * t - 2.0 * c - 1.0


def in_state_space(n: np.ndarray, tol: float = TAU_MEM) -> bool:
    """Closed-form membership: 3 n.n - 2 (n*n).n <= 1 and n.n <= 1."""
    t, c = invariants(n)
    return bool(3.0 * t - 2.0 * c <= 1.0 + tol) and bool(t <= 1.0 + tol)


def on_boundary(n: np.ndarray, tol: float = TAU_MEM) -> bool:
    """Saturation of the cubic inequality, within the unit ball."""
    t, _ = invariants(n)
    return bool(abs(boundary_residual(n)) <= tol) and bool(t <= 1.0 + tol)


def is_extremal(n: np.ndarray, tol: float = TAU_MEM) -> bool:
    """n.n = 1 and n * n = n; equivalent to rho(n) being a rank-1 projector."""
    n = np.asarray(n, dtype=float)
    t = float(n @ n)
    return abs(t - 1.0) <= tol and float(np.abs(star(n, n) - n).max()) <= tol


def purity_defect(n: np.ndarray) -> float:
    """Max-norm of rho(n)^2 - rho(n); matrix-level cross-check of is_extremal."""
    rho = bloch_to_density(n)
    return float(np.abs(rho @ rho - rho).max())


# ---------------------------------------------------------------------------
# Boundary ray casting
# ---------------------------------------------------------------------------

def _cubic_smallest_root(c: np.ndarray) -> np.ndarray:
    """Smallest root in [0.4, 1.05] of g(r) = 3 r^2 - 2 c r^3 - 1, batched.

    For |c| <= 1 the cubic has all roots real; they are computed by the
    trigonometric form of the cubic formula.  For |c| below a crossover the
    closed form loses digits to cancellation, so the root near 1/sqrt(3) is
    taken as the seed instead; a short Newton polish then brings every entry
    to full precision.  Ties at the c = 1 double root resolve to the smaller
    root, which is the boundary crossing.
    """
    c = np.asarray(c, dtype=float)
    small = np.abs(c) < 1e-4
    cs = np.where(small, 1.0, c)  # placeholder where the trig branch is unused

    # Trig solution of 2c r^3 - 3 r^2 + 1 = 0, depressed via r = t + 1/(2c):
    # t_k = (1/|c|) cos((acos(arg) - 2 pi k)/3), arg = (1 - 2 c^2) sign(c).
    arg = np.clip((1.0 - 2.0 * cs**2) * np.sign(cs), -1.0, 1.0)
    theta = np.arccos(arg) / 3.0
    shift = 1.0 / (2.0 * cs)
    k = np.arange(3.0).reshape((3,) + (1,) * c.ndim)
    roots = np.cos(theta - 2.0 * np.pi * k / 3.0) / np.abs(cs) + shift

    in_range = (roots >= 0.4) & (roots <= 1.05)
    roots_masked = np.where(in_range, roots, np.inf)
    r = roots_masked.min(axis=0)
    r = np.where(small, 1.0 / SQRT3, r)

    # Newton polish; skipped where g' ~ 0 (the double root is already exact
    # there and the residual is quadratic in the error anyway).
    for _ in range(3):
        g = 3.0 * r**2 - 2.0 * c * r**3 - 1.0
        gp = 6.0 * r - 6.0 * c * r**2
        step = np.where(np.abs(gp) > 1e-6, g / np.where(gp == 0.0, 1.0, gp), 0.0)
        r = r - step

    # Fallback for any entry the closed form failed to bracket.
    bad = ~np.isfinite(r) | (r < 0.4) | (r > 1.05)
    if np.any(bad):
        idx = np.argwhere(bad)
        for i in idx:
            r[tuple(i)] = _bisect_root(float(c[tuple(i)]))
    return r


def _bisect_root(c: float, lo: float = 0.4, hi: float = 1.05) -> float:
    g = lambda r: 3.0 * r**2 - 2.0 * c * r**3 - 1.0
    glo = g(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if glo * gm <= 0.0:
            hi = mid
        else:
            lo, glo = mid, gm
    return 0.5 * (lo + hi)


def boundary_radius_batch(u: np.ndarray) -> np.ndarray:
    """Boundary radii for a batch of unit directions, shape (..., 8)."""
    u = np.asarray(u, dtype=float)
    t = np.einsum("...j,...j->...", u, u)
    if np.abs(t - 1.0).max() > TAU_NUM:
        raise ValueError("directions must be unit vectors")
    _, c = invariants(u)
    # The cubic invariant is bounded by 1 in magnitude on unit vectors;
    # round-off straying past +-1 flips the root structure, so snap it.
    # Near |c| = 1 the root has infinite sensitivity dr/dc, which makes
    # c within ~1e-13 of +-1 indistinguishable from +-1 in double precision.
    if np.any(np.abs(c) > 1.0 + 1e-9):
        raise ValueError("cubic invariant out of range; direction not unit?")
    c = np.clip(c, -1.0, 1.0)
    c = np.where(np.abs(c - 1.0) <= 1e-13, 1.0, c)
    c = np.where(np.abs(c + 1.0) <= 1e-13, -1.0, c)
    r = np.where(c == 1.0, 1.0, np.where(c == -1.0, 0.5, _cubic_smallest_root(c)))
    return r


def boundary_radius(u: np.ndarray) -> float:
    """Distance from the center to the boundary along the unit direction u.

    Solves 3 r^2 - 2 c r^3 = 1 with c = (u*u).u for the smallest positive
    root; the result always lies in [1/2, 1] and rho(r u) is singular
    positive semidefinite.
    """
    return float(boundary_radius_batch(np.asarray(u, dtype=float)))


def dual_point(n: np.ndarray) -> np.ndarray:
    """The opposite inner point -n/2; a boundary point whenever n is extremal."""
    return -0.5 * np.asarray(n, dtype=float)


def self_dual_check(n: np.ndarray, tol: float = TAU_MEM) -> bool:
    """For a boundary point with |n| = 1/sqrt(3), test that -n is on the
    boundary too (n.lambda singular implies -n.lambda singular).

    Raises ValueError unless |n| = 1/sqrt(3) (within TAU_NUM) and n is a
    boundary point.
    """
    n = np.asarray(n, dtype=float)
    t = float(n @ n)
    if abs(t - 1.0 / 3.0) > TAU_NUM:
        raise ValueError("point is not on the radius-1/sqrt(3) sphere")
    if not on_boundary(n, tol):
        raise ValueError("point is not on the boundary")
    return on_boundary(-n, tol)


# ---------------------------------------------------------------------------
# Characteristic-polynomial positivity test
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CharPoly:
    """Coefficients of P(y) = det(yI + H) = y^3 + c1 y^2 + c2 y + c3."""

    c1: float
    c2: float
    c3: float

    def __call__(self, y: float) -> float:
        return ((y + self.c1) * y + self.c2) * y + self.c3

    def deriv1(self, y: float) -> float:
        return (3.0 * y + 2.0 * self.c1) * y + self.c2

    def deriv2(self, y: float) -> float:
        return 6.0 * y + 2.0 * self.c1


def char_poly(h: np.ndarray) -> CharPoly:
    """Coefficients of det(yI + H) from the traces of H, H^2, H^3."""
    h = np.asarray(h, dtype=complex)
    if np.abs(h - h.conj().T).max() > TAU_SYM:
        raise ValueError("matrix is not hermitian")
    t1 = np.trace(h).real
    t2 = np.trace(h @ h).real
    t3 = np.trace(h @ h @ h).real
    c1 = t1
    c2 = (t1**2 - t2) / 2.0
    c3 = (t1**3 - 3.0 * t1 * t2 + 2.0 * t3) / 6.0
    return CharPoly(float(c1), float(c2), float(c3))


def charpoly_positive(h: np.ndarray, tol: float = TAU_MEM) -> bool:
    """True when I + H >= 0, via P(1) >= 0, P'(1) >= 0, P''(1) >= 0."""
    p = char_poly(h)
    return p(1.0) >= -tol and p.deriv1(1.0) >= -tol and p.deriv2(1.0) >= -tol


def charpoly_values_batch(n: np.ndarray) -> np.ndarray:
    """(P(1), P'(1), P''(1)) for H = sqrt(3) n.lambda, batched over (..., 8).

    Evaluated from the two invariants: c1 = 0, c2 = -3 t, c3 = 2 c(n), so
    P(1) = 1 - 3t + 2c, P'(1) = 3 - 3t, P''(1) = 6.
    """
    t, c = invariants(n)
    p0 = 1.0 - 3.0 * t + 2.0 * c
    p1 = 3.0 - 3.0 * t
    p2 = np.full_like(p0, 6.0)
    return np.stack([p0, p1, p2], axis=-1)
