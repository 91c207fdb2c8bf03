"""Closed-form solutions and data sets for the strip experiments.

All evaluators take broadcastable ``x``, ``y``, ``t`` and return complex
arrays: a two-component (imaginary ``b``) run compares component 1 with the
real part and component 2 with the imaginary part, a one-component run uses
the real part only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fd import BoundaryCoefficient, Grid2D, ProblemData

__all__ = [
    "TravelingWave",
    "SurfaceWave",
    "GaussianPulse",
    "ForcingFamily",
    "OMEGA0",
    "PULSE_WIDTH",
    "PULSE_T0",
]

OMEGA0 = 8.0 * math.pi
PULSE_WIDTH = 0.03
PULSE_T0 = 0.2
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class TravelingWave:
    """``sin(2 pi (x - t)) sin(2 pi y)``, plus ``i cos(2 pi (x - t)) cos(2 pi y)``
    when ``two_component``.

    Both parts satisfy ``u_tt - u_xx - u_yy = 4 pi^2 u``; the boundary forcings
    are read off from ``u_x - b u_y`` at x = 0 and ``u_x`` at x = 1.
    """

    two_component: bool = False

    def u(self, x, y, t):
        p, q = TWO_PI * (x - t), TWO_PI * y
        out = np.sin(p) * np.sin(q) + 0j
        if self.two_component:
            out = out + 1j * np.cos(p) * np.cos(q)
        return out

    def u_x(self, x, y, t):
        p, q = TWO_PI * (x - t), TWO_PI * y
        out = TWO_PI * np.cos(p) * np.sin(q) + 0j
        if self.two_component:
            out = out - 1j * TWO_PI * np.sin(p) * np.cos(q)
        return out

    def u_y(self, x, y, t):
        p, q = TWO_PI * (x - t), TWO_PI * y
        out = TWO_PI * np.sin(p) * np.cos(q) + 0j
        if self.two_component:
            out = out - 1j * TWO_PI * np.cos(p) * np.sin(q)
        return out

    def u_t(self, x, y, t):
        return -self.u_x(x, y, t)

    def forcing(self, x, y, t):
        return TWO_PI**2 * self.u(x, y, t)

    def problem_data(self, grid: Grid2D, bc: BoundaryCoefficient) -> ProblemData:
        if (bc.ncomponents == 2) != self.two_component:
            raise ValueError("component count of the solution and the boundary coefficient differ")
        b, dt = bc.b, grid.dt
        return ProblemData(
            F=self.forcing,
            g0=lambda y, t: self.u_x(0.0, y, t) - b * self.u_y(0.0, y, t),
            g1=lambda y, t: self.u_x(1.0, y, t),
            f1=lambda x, y: self.u(x, y, 0.0),
            f2_prev=lambda x, y: self.u(x, y, -dt),
        )


@dataclass(frozen=True)
class SurfaceWave:
    """``exp(-|beta omega0| x) exp(i omega0 (y - sqrt(1 - beta^2) t))``.

    Solves the homogeneous wave equation and ``u_x - i beta u_y = 0`` at x = 0
    whenever ``beta * omega0 > 0``.  At x = 1 the Neumann condition is only
    satisfied up to ``|beta omega0| exp(-|beta omega0|)``, so the strip run uses
    ``g1 = 0`` and the comparison is approximate there.
    """

    beta: float
    omega0: float = OMEGA0

    def __post_init__(self):
        if not self.beta * self.omega0 > 0:
            raise ValueError("surface wave needs beta * omega0 > 0")
        if not abs(self.beta) < 1:
            raise ValueError("surface wave needs |beta| < 1")

    @property
    def speed(self) -> float:
        return math.sqrt(1.0 - self.beta**2)

    @property
    def decay(self) -> float:
        return abs(self.beta * self.omega0)

    def u(self, x, y, t):
        return np.exp(-self.decay * np.asarray(x, dtype=float)) * np.exp(1j * self.omega0 * (y - self.speed * t))

    def boundary_trace(self, y, t):
        return np.exp(1j * self.omega0 * (y - self.speed * np.asarray(t, dtype=float)))

    def u_x(self, x, y, t):
        return -self.decay * self.u(x, y, t)

    def u_y(self, x, y, t):
        return 1j * self.omega0 * self.u(x, y, t)

    def u_t(self, x, y, t):
        return -1j * self.omega0 * self.speed * self.u(x, y, t)

    def problem_data(self, grid: Grid2D) -> ProblemData:
        dt = grid.dt
        return ProblemData(
            f1=lambda x, y: self.u(x, y, 0.0),
            f2_prev=lambda x, y: self.u(x, y, -dt),
        )

    def boundary(self) -> BoundaryCoefficient:
        return BoundaryCoefficient.imaginary(self.beta)


@dataclass(frozen=True)
class GaussianPulse:
    """Initial bump ``exp(-|r - center|^2 / L^2)`` at rest (equal levels 0 and -1)."""

    width: float = PULSE_WIDTH
    center: tuple[float, float] = (0.5, 0.5)

    def u0(self, x, y):
        cx, cy = self.center
        return np.exp(-((x - cx) ** 2 + (y - cy) ** 2) / self.width**2)

    def problem_data(self, grid: Grid2D | None = None) -> ProblemData:
        return ProblemData(f1=self.u0, f2_prev=self.u0)


VARIANTS = ("G", "Gt", "Gtt")


@dataclass(frozen=True)
class ForcingFamily:
    """Boundary forcing ``G = u_s(0, y, t) exp(-(t/t0 - 7)^2)`` and its time derivatives.

    With ``r(t) = -i omega0 c - 2 (t/t0 - 7)/t0`` and ``c = sqrt(1 - beta^2)``:
    ``G_t = r G`` and ``G_tt = (r^2 - 2/t0^2) G``.
    """

    beta: float
    variant: str = "G"
    omega0: float = OMEGA0
    t0: float = PULSE_T0

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {self.variant!r}")
        SurfaceWave(self.beta, self.omega0)

    @property
    def wave(self) -> SurfaceWave:
        return SurfaceWave(self.beta, self.omega0)

    def G(self, y, t):
        return self.wave.boundary_trace(y, t) * np.exp(-((t / self.t0 - 7.0) ** 2))

    def _rate(self, t):
        return -1j * self.omega0 * self.wave.speed - 2.0 * (t / self.t0 - 7.0) / self.t0

    def G_t(self, y, t):
        return self._rate(t) * self.G(y, t)

    def G_tt(self, y, t):
        return (self._rate(t) ** 2 - 2.0 / self.t0**2) * self.G(y, t)

    def forcing(self, y, t):
        return {"G": self.G, "Gt": self.G_t, "Gtt": self.G_tt}[self.variant](y, t)

    def problem_data(self, grid: Grid2D | None = None) -> ProblemData:
        return ProblemData(g0=self.forcing)

    def boundary(self) -> BoundaryCoefficient:
        return BoundaryCoefficient.imaginary(self.beta)
