"""Second-order hyperbolic systems ``u_tt = A1 u_x1x1 + sum_j B_j u_xjxj + F``.

After Laplace transform in t and Fourier transform in the tangential
directions ``x_- = (x2, ..., xr)`` the half-space problem becomes the first
order system ``D1 (u, v) = M(s, omega_-) (u, v)`` with

    M = [[0,                      N I],
         [A1^-1 (s^2 I + B) / N,  0  ]],   N = sqrt(|s|^2 + |omega_-|^2),

and ``B(omega_-) = sum_j B_j omega_j**2``.  Its eigenvalues solve
``A1 kappa^2 phi = (B + s^2) phi``; for Re s > 0 exactly n of them lie in
each open half plane.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg as sla

__all__ = [
    "SystemSpec",
    "FirstOrderSymbol",
    "Split",
    "HSpectrum",
    "SplitFailure",
    "DegenerateSpectrum",
    "tangential_matrix",
    "build_first_order_symbol",
    "eigen_split",
    "resolvent_norm",
    "resolvent_product",
    "h_spectrum",
    "block_reduce",
    "exact_h_eigenvalues",
    "resolvent_solution",
    "boundary_determinant",
    "random_spd",
    "random_system",
]


class SplitFailure(ArithmeticError):
    """An eigenvalue of M sits on the imaginary axis although Re s > 0."""


class DegenerateSpectrum(ArithmeticError):
    """Eigenvalues of H are not separated by the required gap."""


def _check_spd(name: str, m: np.ndarray) -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be square, got shape {m.shape}")
    if not np.allclose(m, m.T, rtol=1e-12, atol=1e-14 * np.abs(m).max()):
        raise ValueError(f"{name} is not symmetric")
    w = np.linalg.eigvalsh(m)
    if not w[0] > 1e-10 * w[-1]:
        raise ValueError(f"{name} is not positive definite (eigenvalues {w})")


@dataclass
class SystemSpec:
    """Coefficient matrices of the half-space problem.

    ``A1`` and every ``B[j]`` are real symmetric positive definite.  The
    boundary condition ``u_x1 + C0 u_t + sum_j C[j] u_xj = g`` has the
    coefficient of ``u_x1`` normalized to the identity; ``C`` holds one matrix
    per tangential direction.
    """

    A1: np.ndarray
    B: list
    C0: np.ndarray | None = None
    C: list | None = None

    def __post_init__(self):
        self.A1 = np.atleast_2d(np.asarray(self.A1, dtype=float))
        self.B = [np.atleast_2d(np.asarray(b, dtype=float)) for b in self.B]
        n = self.A1.shape[0]
        _check_spd("A1", self.A1)
        if not self.B:
            raise ValueError("need at least one tangential direction")
        for j, b in enumerate(self.B):
            if b.shape != (n, n):
                raise ValueError(f"B[{j}] has shape {b.shape}, expected {(n, n)}")
            _check_spd(f"B[{j}]", b)
        self.C0 = np.zeros((n, n)) if self.C0 is None else np.atleast_2d(np.asarray(self.C0, dtype=float))
        if self.C is None:
            self.C = [np.zeros((n, n)) for _ in self.B]
        self.C = [np.atleast_2d(np.asarray(c, dtype=float)) for c in self.C]
        if self.C0.shape != (n, n) or len(self.C) != len(self.B) or any(c.shape != (n, n) for c in self.C):
            raise ValueError("boundary matrices must be n x n, one C per tangential direction")
        w, V = np.linalg.eigh(self.A1)
        self._a_inv_sqrt = (V / np.sqrt(w)) @ V.T
        self._a_inv = (V / w) @ V.T

    @property
    def n(self) -> int:
        return self.A1.shape[0]

    @property
    def A1_inv(self) -> np.ndarray:
        return self._a_inv

    @property
    def A1_inv_sqrt(self) -> np.ndarray:
        return self._a_inv_sqrt


def tangential_matrix(sys: SystemSpec, omega_minus) -> np.ndarray:
    """``B(omega_-) = sum_j B_j omega_j**2``."""
    w = np.atleast_1d(np.asarray(omega_minus, dtype=float))
    if w.size != len(sys.B):
        raise ValueError(f"expected {len(sys.B)} tangential wavenumbers, got {w.size}")
    return sum(b * wj**2 for b, wj in zip(sys.B, w))


@dataclass
class FirstOrderSymbol:
    M: np.ndarray
    s: complex
    omega_minus: np.ndarray
    n: int

    @property
    def scale(self) -> float:
        return float(np.sqrt(abs(self.s) ** 2 + np.sum(self.omega_minus**2)))


def build_first_order_symbol(sys: SystemSpec, s: complex, omega_minus) -> FirstOrderSymbol:
    s = complex(s)
    if not s.real > 0:
        raise ValueError("the first-order symbol is formed for Re s > 0 only")
    w = np.atleast_1d(np.asarray(omega_minus, dtype=float))
    n = sys.n
    N = np.sqrt(abs(s) ** 2 + np.sum(w**2))
    lower = sys.A1_inv @ (s * s * np.eye(n) + tangential_matrix(sys, w)) / N
    M = np.block([[np.zeros((n, n)), N * np.eye(n)], [lower, np.zeros((n, n))]]).astype(complex)
    return FirstOrderSymbol(M, s, w, n)


@dataclass
class Split:
    """Ordered complex Schur form ``U^* M U = T`` with Re kappa < 0 leading."""

    n_minus: int
    n_plus: int
    T: np.ndarray
    U: np.ndarray

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.diag(self.T)

    @property
    def stable_basis(self) -> np.ndarray:
        """Orthonormal basis of the decaying (Re kappa < 0) invariant subspace."""
        return self.U[:, : self.n_minus]


def eigen_split(sym: FirstOrderSymbol, tol: float = 1e-10) -> Split:
    M = sym.M
    T, U, sdim = sla.schur(M, output="complex", sort="lhp")
    lam = np.diag(T)
    thresh = tol * np.linalg.norm(M, 2)
    if np.any(np.abs(lam.real) < thresh):
        raise SplitFailure(
            f"eigenvalue with |Re kappa| < {thresh:.3g} at s={sym.s!r}: {lam[np.abs(lam.real) < thresh]}"
        )
    return Split(int(sdim), int(M.shape[0] - sdim), T, U)


def resolvent_norm(M: np.ndarray, omega1: float) -> float:
    """Spectral norm of ``(M - i omega1 I)^-1``."""
    sv = np.linalg.svd(M - 1j * omega1 * np.eye(M.shape[0]), compute_uv=False)
    return float(1.0 / sv[-1])


def resolvent_product(sys: SystemSpec, s: complex, omega, omega1_samples=None) -> float:
    """``sup_omega1 ||(M - i omega1)^-1|| * Re s`` over sampled real ``omega1``.

    ``omega`` holds the tangential wavenumbers.  Default samples are zero, the
    imaginary parts of the eigenvalues of M (where the resolvent peaks) and a
    symmetric log-spaced sweep out to ``100 ||M||``.
    """
    sym = build_first_order_symbol(sys, s, omega)
    M = sym.M
    if omega1_samples is None:
        norm = np.linalg.norm(M, 2)
        sweep = np.geomspace(1e-3, 1e2, 41) * norm
        omega1_samples = np.concatenate([[0.0], sweep, -sweep, np.linalg.eigvals(M).imag])
    best = max(resolvent_norm(M, float(w1)) for w1 in np.atleast_1d(omega1_samples))
    return best * sym.s.real


@dataclass
class HSpectrum:
    """Eigen-decomposition of ``H = A1^-1/2 (B(omega_-') - xi0'^2 I) A1^-1/2``.

    ``kappa_sq`` is sorted in decreasing order; ``split_index`` counts the
    strictly positive entries; ``a_diag`` is the diagonal of ``U^T A1^-1 U``.
    """

    kappa_sq: np.ndarray
    a_diag: np.ndarray
    split_index: int
    U: np.ndarray
    H: np.ndarray
    has_zero: bool


def _check_sphere(omega_minus_prime, xi_prime) -> np.ndarray:
    w = np.atleast_1d(np.asarray(omega_minus_prime, dtype=float))
    r = xi_prime**2 + np.sum(w**2)
    if abs(r - 1.0) > 1e-10:
        raise ValueError(f"xi'^2 + |omega_-'|^2 = {r!r}, expected 1")
    return w


def h_spectrum(sys: SystemSpec, omega_minus_prime, xi0_prime: float, zero_tol: float = 1e-10) -> HSpectrum:
    w = _check_sphere(omega_minus_prime, xi0_prime)
    R = sys.A1_inv_sqrt
    H = R @ (tangential_matrix(sys, w) - xi0_prime**2 * np.eye(sys.n)) @ R
    H = 0.5 * (H + H.T)
    lam, U = np.linalg.eigh(H)
    lam, U = lam[::-1], U[:, ::-1]
    a_diag = np.einsum("ij,ik,kj->j", U, sys.A1_inv, U)
    return HSpectrum(
        kappa_sq=lam,
        a_diag=a_diag,
        split_index=int(np.sum(lam > zero_tol)),
        U=U,
        H=H,
        has_zero=bool(np.any(np.abs(lam) <= zero_tol)),
    )


def exact_h_eigenvalues(sys: SystemSpec, omega_minus_prime, s_prime: complex) -> np.ndarray:
    """Eigenvalues of the complex symmetric ``A1^-1/2 (s'^2 I + B) A1^-1/2``."""
    R = sys.A1_inv_sqrt
    w = np.atleast_1d(np.asarray(omega_minus_prime, dtype=float))
    H = R @ (s_prime**2 * np.eye(sys.n) + tangential_matrix(sys, w)) @ R
    return np.linalg.eigvals(H)


def block_reduce(sys: SystemSpec, omega_minus_prime, xi_prime: float, eta_prime: float, min_gap: float = 1e-6) -> np.ndarray:
    """Diagonal entries ``kappa_j'^2 + 2i a_jj xi' eta'`` of the 2x2-block normal form.

    Ordered like :func:`h_spectrum`.  Requires the eigenvalues of H at
    ``s' = i xi'`` to be pairwise separated by ``min_gap``.
    """
    hs = h_spectrum(sys, omega_minus_prime, xi_prime)
    lam = hs.kappa_sq
    if lam.size > 1:
        gap = np.min(np.abs(np.diff(lam)))
        if gap < min_gap:
            raise DegenerateSpectrum(f"eigenvalue gap {gap:.3g} below {min_gap:.3g}")
    return lam + 2j * hs.a_diag * xi_prime * eta_prime


def resolvent_solution(sys: SystemSpec, s: complex, omega, Fhat) -> np.ndarray:
    """Solve ``(s^2 I + A1 omega_1^2 + sum_j B_j omega_j^2) u = F`` for Re s > 0.

    ``omega = (omega_1, omega_2, ..., omega_r)`` is the full wavenumber.
    """
    s = complex(s)
    if not s.real > 0:
        raise ValueError("the resolvent is formed for Re s > 0 only")
    w = np.atleast_1d(np.asarray(omega, dtype=float))
    P = sys.A1 * w[0] ** 2 + tangential_matrix(sys, w[1:])
    F = np.atleast_1d(np.asarray(Fhat, dtype=complex))
    return np.linalg.solve(s * s * np.eye(sys.n) + P, F)


def boundary_determinant(sys: SystemSpec, s: complex, omega_minus) -> complex:
    """Determinant of the boundary condition restricted to decaying solutions.

    With the decaying subspace spanned by ``(Y_u, Y_v)`` (``u_x1 = N Y_v c``),
    returns ``det(N Y_v + (C0 s + i sum_j C_j omega_j) Y_u) / det(Y_u)``.  A
    zero with Re s > 0 is an eigenvalue of the half-space problem.
    """
    sym = build_first_order_symbol(sys, s, omega_minus)
    split = eigen_split(sym)
    Y = split.stable_basis
    n = sys.n
    Yu, Yv = Y[:n], Y[n:]
    w = sym.omega_minus
    Cb = sys.C0 * sym.s + 1j * sum(c * wj for c, wj in zip(sys.C, w))
    return complex(np.linalg.det(sym.scale * Yv + Cb @ Yu) / np.linalg.det(Yu))


def random_spd(rng: np.random.Generator, n: int, cond: float = 10.0) -> np.ndarray:
    Q, _ = np.linalg.qr(rng.standard_normal((n, n)))
    w = np.exp(rng.uniform(0.0, np.log(cond), n))
    return (Q * w) @ Q.T


def random_system(rng: np.random.Generator, n: int, r: int = 2, cond: float = 10.0) -> SystemSpec:
    """Random system with ``r - 1`` tangential directions."""
    return SystemSpec(random_spd(rng, n, cond), [random_spd(rng, n, cond) for _ in range(r - 1)])
