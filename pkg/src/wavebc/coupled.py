"""Two wave equations coupled only through the boundary conditions at x = 0::

    u1_x + b1 u2_y = g1,    u2_x + b2 u1_y = g2.

The transformed boundary system has determinant ``kappa**2 + omega**2 b1 b2
= s**2 + omega**2 (1 + b1 b2)``, so every property depends on the product
``p = b1*b2`` alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .branch import DualPoint, kappa
from .report import GeneralizedEigenvalue, StabilityClass, StabilityReport, WaveKind

__all__ = [
    "CoupledBC",
    "SingularBoundarySystem",
    "coupled_determinant",
    "coupled_boundary_matrix",
    "coupled_boundary_solution",
    "classify_coupled",
]


class SingularBoundarySystem(ArithmeticError):
    """The 2x2 boundary system is singular: an eigenvalue or generalized eigenvalue."""


@dataclass(frozen=True)
class CoupledBC:
    b1: float
    b2: float

    @property
    def product(self) -> float:
        return self.b1 * self.b2


def coupled_determinant(cb: CoupledBC, p: DualPoint) -> complex:
    if p.eta < 0:
        raise ValueError("needs Re s >= 0")
    return p.s * p.s + p.omega**2 * (1.0 + cb.product)


def coupled_boundary_matrix(cb: CoupledBC, p: DualPoint) -> np.ndarray:
    k = kappa(p).value
    w = p.omega
    return np.array([[-k, 1j * w * cb.b1], [1j * w * cb.b2, -k]])


def coupled_boundary_solution(cb: CoupledBC, g1hat: complex, g2hat: complex, p: DualPoint):
    """Boundary amplitudes ``(u10, u20)`` of the decaying solution."""
    det = coupled_determinant(cb, p)
    if not abs(det) > 1e-13 * (abs(p.s) ** 2 + p.omega**2):
        raise SingularBoundarySystem(
            f"kappa^2 + omega^2 b1 b2 = {det!r} at s={p.s!r}, omega={p.omega!r}"
        )
    k = kappa(p).value
    w = p.omega
    u10 = -(k * g1hat + 1j * w * cb.b1 * g2hat) / det
    u20 = -(k * g2hat + 1j * w * cb.b2 * g1hat) / det
    return complex(u10), complex(u20)


def classify_coupled(cb: CoupledBC) -> StabilityReport:
    """Five regimes of ``p = b1*b2``.

    ``p < -1``       eigenvalue ``s = |omega| sqrt(-1-p)`` with Re s > 0: ill posed
    ``p == -1``      ``s = 0`` is a generalized eigenvalue (degenerate)
    ``-1 < p < 0``   surface waves at ``s = +-i sqrt(1+p) |omega|``
    ``p == 0``       glancing waves at ``s = +-i omega``
    ``p > 0``        oscillatory waves, unstable
    """
    p = cb.product
    S = StabilityClass
    coeffs = {"b1": cb.b1, "b2": cb.b2}
    label = "coupled"
    if p < -1:
        return StabilityReport(
            S.ILL_POSED,
            notes="b1*b2 < -1: eigenvalues with Re s > 0",
            eigenvalues=[complex(math.sqrt(-1.0 - p) / math.sqrt(-p), 0.0)],
            label=label,
            coefficients=coeffs,
        )
    if p == -1:
        ge = GeneralizedEigenvalue(0.0, 1.0, 1.0 + 0j, WaveKind.SURFACE)
        return StabilityReport(
            S.DEGENERATE,
            [ge],
            notes=(
                "b1*b2 = -1: s = 0 is a generalized eigenvalue; boundary values behave like 1/s^2 "
                "and stay bounded only if the data are second time derivatives of smooth functions"
            ),
            label=label,
            coefficients=coeffs,
        )
    om = 1.0 / math.sqrt(2.0 + p)
    xi = math.sqrt(1.0 + p) * om
    if p < 0:
        k0 = complex(math.sqrt(-p) * om, 0.0)
        ges = [GeneralizedEigenvalue(sg * xi, om, k0, WaveKind.SURFACE) for sg in (1.0, -1.0)]
        return StabilityReport(
            S.STABLE,
            ges,
            notes="surface waves; amplitudes grow as b1*b2 -> -1",
            holds=(S.BOUNDARY_STABLE, S.STABLE),
            label=label,
            coefficients=coeffs,
        )
    if p == 0:
        ges = [GeneralizedEigenvalue(sg * xi, om, 0j, WaveKind.GLANCING) for sg in (1.0, -1.0)]
        return StabilityReport(
            S.STABLE,
            ges,
            notes="glancing waves, as for the Neumann problem",
            holds=(S.BOUNDARY_STABLE, S.STABLE),
            label=label,
            coefficients=coeffs,
        )
    ges = [
        GeneralizedEigenvalue(sg * xi, om, complex(0.0, sg * math.sqrt(p) * om), WaveKind.OSCILLATORY)
        for sg in (1.0, -1.0)
    ]
    return StabilityReport(
        S.UNSTABLE,
        ges,
        notes="oscillatory boundary waves, behaves like the type4 scalar condition",
        holds=(S.BOUNDARY_STABLE, S.UNSTABLE),
        label=label,
        coefficients=coeffs,
    )
