"""Fixed-branch square root, normalized dual variables and lower bounds on kappa.

A Laplace-Fourier point is a pair ``(s, omega)`` with ``s = eta + i*xi``.  The
normal-direction root is

    kappa = sqrt(s**2 + omega**2),   -pi < arg(s**2 + omega**2) <= pi,

with ``arg kappa = arg(s**2 + omega**2) / 2``.  The cut is the negative real
axis of ``s**2 + omega**2``; a point exactly on it maps to ``arg kappa = pi/2``
and kappa is discontinuous across it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DualPoint",
    "NormalizedDualPoint",
    "Kappa",
    "BoundConstants",
    "Inequality",
    "BoundReport",
    "sqrt_branch",
    "kappa",
    "kappa_values",
    "kappa_limit",
    "normalize",
    "denormalize",
    "bound_margins",
    "bound_report",
]


@dataclass(frozen=True)
class DualPoint:
    """Laplace frequency ``s`` and real tangential wavenumber ``omega``."""

    s: complex
    omega: float

    def __post_init__(self):
        object.__setattr__(self, "s", complex(self.s))
        object.__setattr__(self, "omega", float(self.omega))
        if self.s == 0 and self.omega == 0:
            raise ValueError("(s, omega) = (0, 0): the branch of kappa is undefined")

    @property
    def eta(self) -> float:
        return self.s.real

    @property
    def xi(self) -> float:
        return self.s.imag

    @property
    def scale(self) -> float:
        return math.sqrt(abs(self.s) ** 2 + self.omega**2)


@dataclass(frozen=True)
class NormalizedDualPoint:
    """Point on the unit sphere ``|s'|**2 + omega'**2 = 1``."""

    s_prime: complex
    omega_prime: float

    def __post_init__(self):
        object.__setattr__(self, "s_prime", complex(self.s_prime))
        object.__setattr__(self, "omega_prime", float(self.omega_prime))
        radius = abs(self.s_prime) ** 2 + self.omega_prime**2
        if abs(radius - 1.0) > 1e-12:
            raise ValueError(f"|s'|^2 + omega'^2 = {radius!r}, expected 1")

    @property
    def eta_prime(self) -> float:
        return self.s_prime.real

    @property
    def xi_prime(self) -> float:
        return self.s_prime.imag

    @property
    def kappa_prime(self) -> complex:
        return complex(sqrt_branch(self.s_prime**2 + self.omega_prime**2))


@dataclass(frozen=True)
class Kappa:
    value: complex
    branch_arg: float  # arg(s**2 + omega**2), in (-pi, pi]


def sqrt_branch(z):
    """Square root with ``-pi < arg z <= pi`` and ``arg sqrt(z) = arg(z)/2``.

    numpy's principal root honours the sign of a zero imaginary part, so
    ``-4 - 0j`` would map to ``-2j``.  Zero imaginary parts are forced to +0 so
    that the whole negative real axis maps to the positive imaginary axis.
    """
    z = np.asarray(z, dtype=complex)
    z = np.where(z.imag == 0, z.real + 0j, z)
    out = np.sqrt(z)
    return out[()] if out.ndim == 0 else out


def kappa_values(s, omega):
    """Vectorized ``kappa`` on arrays of ``s`` and ``omega`` (no origin check)."""
    s = np.asarray(s, dtype=complex)
    omega = np.asarray(omega, dtype=float)
    return sqrt_branch(s * s + omega * omega)


def kappa_limit(s, omega):
    """kappa as the limit from ``Re s > 0``.

    Identical to :func:`kappa_values` for ``Re s > 0``.  On the imaginary
    axis ``s = i*xi`` the radicand ``omega**2 - xi**2`` is real; approaching from
    the right it picks up ``2i*xi*eta`` so the side of the cut follows
    ``sign(xi)``.  This is the value a boundary symbol takes at a generalized
    eigenvalue.
    """
    s = np.asarray(s, dtype=complex)
    omega = np.asarray(omega, dtype=float)
    z = np.array(s * s + omega * omega, dtype=complex)
    on_axis = (s.real == 0) & (z.imag == 0)
    z.imag = np.where(on_axis, np.copysign(0.0, s.imag), z.imag)
    out = np.sqrt(z)
    return out[()] if out.ndim == 0 else out


def kappa(p: DualPoint) -> Kappa:
    """Branch-fixed ``kappa = sqrt(s**2 + omega**2)`` at a dual point."""
    z = complex(p.s * p.s + p.omega * p.omega)
    if z.imag == 0:
        z = complex(z.real, 0.0)
    arg = math.atan2(z.imag, z.real)
    if arg == -math.pi:
        arg = math.pi
    return Kappa(complex(sqrt_branch(z)), arg)


def normalize(p: DualPoint) -> tuple[NormalizedDualPoint, float]:
    scale = p.scale
    s_prime = p.s / scale
    omega_prime = p.omega / scale
    return NormalizedDualPoint(s_prime, omega_prime), scale


def denormalize(q: NormalizedDualPoint, scale: float) -> DualPoint:
    if not scale > 0:
        raise ValueError("scale must be positive")
    return DualPoint(q.s_prime * scale, q.omega_prime * scale)


@dataclass(frozen=True)
class BoundConstants:
    """Constants of the kappa lower bounds for a free parameter ``0 < delta < 1``.

    ``delta2 = (1 - delta)**(1/4)``.  Where ``|a| < delta R**2`` one has
    ``2 xi**2 >= (1 - delta) R**2`` and the lower polar bound gives
    ``|kappa| >= 2**-1/4 sqrt(2 |xi| eta) >= (1 - delta)**(1/4) sqrt(R eta)``.
    The larger ``sqrt(2) (1 - delta)**(1/4)`` does not hold: at
    ``s = 1.7063 + 2.7930i, omega = 2.3901, delta = 1/2`` the ratio
    ``|kappa| / sqrt(R eta)`` is 1.176 < 2**(1/4).
    """

    delta: float
    delta1: float
    delta2: float
    delta3: float
    delta4: float
    delta6: float

    @classmethod
    def from_delta(cls, delta: float) -> "BoundConstants":
        if not 0.0 < delta < 1.0:
            raise ValueError(f"delta must lie in (0, 1), got {delta!r}")
        d1 = 2.0**-0.25 * math.sqrt(delta)
        d2 = (1.0 - delta) ** 0.25
        d3 = min(d1, d2)
        d4 = 2.0**-0.75 * min(1.0, d3)
        d6 = min(d1 * d4, 2.0**-1.25 * d2**2, 2.0**-0.75)
        return cls(delta, d1, d2, d3, d4, d6)


@dataclass(frozen=True)
class Inequality:
    name: str
    lhs: float
    rhs: float

    @property
    def holds(self) -> bool:
        # several bounds are attained (e.g. polar_lower at |a| = |b|); allow round-off
        return self.lhs >= self.rhs * (1.0 - 1e-12)


@dataclass(frozen=True)
class BoundReport:
    point: DualPoint
    constants: BoundConstants
    abs_kappa: float
    re_kappa: float
    inequalities: tuple[Inequality, ...]

    @property
    def all_hold(self) -> bool:
        return all(q.holds for q in self.inequalities)

    def __getitem__(self, name: str) -> Inequality:
        for q in self.inequalities:
            if q.name == name:
                return q
        raise KeyError(name)


def bound_margins(s, omega, delta: float = 0.5) -> dict[str, tuple[np.ndarray, np.ndarray]]:
    """Left and right sides of every kappa lower/upper bound, vectorized.

    Each entry is ``name -> (lhs, rhs)`` with the claim ``lhs >= rhs``.  With
    ``a = omega**2 + eta**2 - xi**2``, ``b = 2*xi*eta`` and
    ``R = sqrt(omega**2 + |s|**2)``:

    ``polar_lower``        |kappa| >= 2**-1/4 sqrt(|a|+|b|)
    ``polar_upper``        sqrt(|a|+|b|) >= |kappa|
    ``polar_real``         Re kappa >= 2**-3/4 sqrt(|a|+|b|)       (a >= 0)
                           Re kappa >= |b| / (2 sqrt(|a|+|b|))      (a <= 0)
    ``abs_split``          |kappa| >= delta1 R                      (|a| >= delta R**2)
                           |kappa| >= delta2 sqrt(R eta)            (otherwise)
    ``abs_eta``            |kappa| >= delta3 eta
    ``real_split``         Re kappa >= 2**-5/4 |kappa|              (a >= 0)
                           Re kappa >= 2**-3/4 R eta / |kappa|      (a < 0)
    ``real_eta``           Re kappa >= delta4 eta
    ``product``            |kappa| Re kappa >= delta6 R eta
    ``normalized_real``    Re kappa' >= delta4 eta'
    ``normalized_abs``     |kappa'| >= 2**-1/4 eta'
    ``normalized_product`` |kappa'| Re kappa' >= delta6 eta'
    """
    c = BoundConstants.from_delta(delta)
    s = np.asarray(s, dtype=complex)
    omega = np.asarray(omega, dtype=float)
    eta, xi = s.real, s.imag
    a = omega**2 + eta**2 - xi**2
    b = 2.0 * xi * eta
    k = kappa_values(s, omega)
    ak, rk = np.abs(k), k.real
    R = np.sqrt(omega**2 + np.abs(s) ** 2)
    ab = np.sqrt(np.abs(a) + np.abs(b))
    with np.errstate(divide="ignore", invalid="ignore"):
        polar_real = np.where(a >= 0, 2.0**-0.75 * ab, 0.5 * np.abs(b) / ab)
        real_split = np.where(a >= 0, 2.0**-1.25 * ak, 2.0**-0.75 * R * eta / ak)
    abs_split = np.where(
        np.abs(a) >= c.delta * R**2, c.delta1 * R, c.delta2 * np.sqrt(R * eta)
    )
    eta_n = eta / R
    return {
        "polar_lower": (ak, 2.0**-0.25 * ab),
        "polar_upper": (ab, ak),
        "polar_real": (rk, polar_real),
        "abs_split": (ak, abs_split),
        "abs_eta": (ak, c.delta3 * eta),
        "real_split": (rk, real_split),
        "real_eta": (rk, c.delta4 * eta),
        "product": (ak * rk, c.delta6 * R * eta),
        "normalized_real": (rk / R, c.delta4 * eta_n),
        "normalized_abs": (ak / R, 2.0**-0.25 * eta_n),
        "normalized_product": (ak * rk / R**2, c.delta6 * eta_n),
    }


def bound_report(p: DualPoint, delta: float = 0.5) -> BoundReport:
    if p.eta < 0:
        raise ValueError("bound_report needs Re s >= 0")
    k = kappa(p).value
    margins = bound_margins(p.s, p.omega, delta)
    ineqs = tuple(Inequality(name, float(lhs), float(rhs)) for name, (lhs, rhs) in margins.items())
    return BoundReport(p, BoundConstants.from_delta(delta), abs(k), k.real, ineqs)
