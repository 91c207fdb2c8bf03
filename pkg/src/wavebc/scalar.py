"""Mode analysis of the half-plane wave equation with one scalar boundary condition.

Four families of boundary conditions at ``x = 0`` are treated::

    type1   u_t = a u_x + b u_y + g      a > 0, |b| < 1
    type2   u_x = i b u_y + g            b real, b != 0, |b| < 1
    type3   u_x = g
    type4   u_x = b u_y + g              b real, b != 0

After Laplace (t -> s) and Fourier (y -> omega) transformation the decaying
solution is ``exp(-kappa x)`` and each condition reduces to a scalar boundary
symbol in the normalized variables ``s', omega', kappa'``.  Its zeros with
``Re s' > 0`` are eigenvalues (ill-posedness); its zeros in the limit
``Re s' -> 0+`` are generalized eigenvalues.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .branch import DualPoint, NormalizedDualPoint, kappa_limit
from .report import GeneralizedEigenvalue, StabilityClass, StabilityReport, WaveKind

__all__ = [
    "BCType",
    "ScalarBC",
    "SlopeFit",
    "boundary_symbol",
    "symbol_values",
    "eigenvalue_search",
    "generalized_eigenvalues",
    "perturbation_slope",
    "classify_scalar",
]

ZERO_TOL = 1e-8
MAX_LISTED = 16


class BCType(enum.Enum):
    TYPE1 = "type1"
    TYPE2 = "type2"
    TYPE3 = "type3"
    TYPE4 = "type4"


@dataclass(frozen=True)
class ScalarBC:
    """One of the four scalar boundary conditions.

    Illegal coefficients raise unless ``flagged=True``, which is meant for
    demonstrating ill-posed problems (e.g. type1 with ``a <= 0``).
    """

    kind: BCType
    a: float = 0.0
    b: float = 0.0
    flagged: bool = False

    def __post_init__(self):
        object.__setattr__(self, "kind", BCType(self.kind))
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        problem = self.violation()
        if problem and not self.flagged:
            raise ValueError(f"illegal {self.kind.value} boundary condition: {problem}")

    def violation(self) -> str:
        """Empty string for legal coefficients, otherwise the reason."""
        k, a, b = self.kind, self.a, self.b
        if not (math.isfinite(a) and math.isfinite(b)):
            return "coefficients must be finite"
        if k is BCType.TYPE1:
            if not a > 0:
                return "a must be positive"
            if not abs(b) < 1:
                return "|b| must be < 1"
        elif k is BCType.TYPE2:
            if b == 0 or not abs(b) < 1:
                return "need 0 < |b| < 1"
        elif k is BCType.TYPE4:
            if b == 0:
                return "b must be nonzero"
        return ""

    @property
    def legal(self) -> bool:
        return not self.violation()

    @property
    def label(self) -> str:
        return self.kind.value


def symbol_values(bc: ScalarBC, s, omega):
    """Boundary symbol on arrays, homogeneous of degree one in ``(s, omega)``.

    type1 ``s + a kappa - i b omega``, type2 ``kappa - b omega``,
    type3 ``kappa``, type4 ``kappa + i b omega``.
    """
    s = np.asarray(s, dtype=complex)
    omega = np.asarray(omega, dtype=float)
    k = kappa_limit(s, omega)
    if bc.kind is BCType.TYPE1:
        return s + bc.a * k - 1j * bc.b * omega
    if bc.kind is BCType.TYPE2:
        return k - bc.b * omega
    if bc.kind is BCType.TYPE3:
        return k + 0.0 * omega
    return k + 1j * bc.b * omega


def boundary_symbol(bc: ScalarBC, q: NormalizedDualPoint) -> complex:
    if q.eta_prime < 0:
        raise ValueError("boundary symbol needs Re s' >= 0")
    return complex(symbol_values(bc, q.s_prime, q.omega_prime))


def _symbol_ds(bc: ScalarBC, s, omega):
    k = kappa_limit(s, omega)
    dk = s / k
    if bc.kind is BCType.TYPE1:
        return 1.0 + bc.a * dk
    return dk


def eigenvalue_search(
    bc: ScalarBC, grid_density: int = 32, eta_min: float = 1e-6, newton_steps: int = 60
) -> list[DualPoint]:
    """Zeros of the boundary symbol with ``Re s' > 0``.

    The half sphere ``{|s'|^2 + omega'^2 = 1, Re s' > 0}`` is covered by
    ``grid_density`` log-spaced values of ``eta'`` in ``[eta_min, 1)`` times
    ``4*grid_density`` angles for ``(xi', omega')``.  Every grid point seeds a
    Newton iteration in ``s'`` at fixed ``omega'``; converged points are
    renormalized and kept when ``|symbol| < 1e-8`` and ``Re s' >= eta_min``.
    Returned points are normalized (``s = s'``, ``omega = omega'``).
    """
    if grid_density < 16:
        raise ValueError("grid_density must be >= 16")
    eta = np.geomspace(eta_min, 0.999, grid_density)
    alpha = np.linspace(-np.pi, np.pi, 4 * grid_density, endpoint=False)
    E, A = np.meshgrid(eta, alpha, indexing="ij")
    rho = np.sqrt(1.0 - E**2)
    s = (E + 1j * rho * np.sin(A)).ravel()
    omega = (rho * np.cos(A)).ravel()

    with np.errstate(all="ignore"):
        for _ in range(newton_steps):
            f = symbol_values(bc, s, omega)
            df = _symbol_ds(bc, s, omega)
            step = np.where(np.isfinite(df) & (df != 0), f / df, 0.0)
            s = s - step
        scale = np.sqrt(np.abs(s) ** 2 + omega**2)
        sp, op = s / scale, omega / scale
        val = np.abs(symbol_values(bc, sp, op))
    ok = np.isfinite(val) & (val < ZERO_TOL) & (sp.real >= eta_min)

    sp, op = sp[ok], op[ok]
    keys = np.round(np.column_stack([sp.real, sp.imag, op]), 6)
    _, first = np.unique(keys, axis=0, return_index=True)
    return [DualPoint(complex(sp[i]), float(op[i])) for i in sorted(first)]


def generalized_eigenvalues(bc: ScalarBC) -> list[GeneralizedEigenvalue]:
    """Closed-form generalized eigenvalues on the unit circle.

    Canonical representatives have ``omega0' >= 0`` with every admissible sign
    of ``xi0'``.  Two exceptions follow from sign conditions: type2 needs
    ``b*omega0' > 0`` (so ``omega0' < 0`` when ``b < 0``), and type4 needs
    ``xi0' * b * omega0' < 0``, which leaves a single ``xi0'`` for ``omega0' > 0``.
    """
    b = bc.b
    if bc.kind is BCType.TYPE1:
        return []
    if bc.kind is BCType.TYPE2:
        om = math.copysign(1.0 / math.sqrt(2.0 - b * b), b)
        xi = math.sqrt(1.0 - b * b) * abs(om)
        k0 = complex(b * om, 0.0)
        return [GeneralizedEigenvalue(sg * xi, om, k0, WaveKind.SURFACE) for sg in (1.0, -1.0)]
    if bc.kind is BCType.TYPE3:
        r = math.sqrt(0.5)
        return [GeneralizedEigenvalue(sg * r, r, 0j, WaveKind.GLANCING) for sg in (1.0, -1.0)]
    om = 1.0 / math.sqrt(2.0 + b * b)
    xi = -math.copysign(math.sqrt(1.0 + b * b) * om, b)
    return [GeneralizedEigenvalue(xi, om, complex(0.0, -om * b), WaveKind.OSCILLATORY)]


@dataclass(frozen=True)
class SlopeFit:
    order: float
    constant: float


def perturbation_slope(bc: ScalarBC, ge: GeneralizedEigenvalue, eta_samples) -> SlopeFit:
    """Fit ``|symbol(i xi0' + eta', omega0')| ~ constant * eta'**order``."""
    eta = np.asarray(eta_samples, dtype=float)
    if eta.size == 0:
        raise ValueError("eta_samples is empty")
    if np.any(eta <= 0):
        raise ValueError("eta_samples must be positive")
    vals = np.abs(symbol_values(bc, 1j * ge.xi0_prime + eta, ge.omega0_prime))
    order, logc = np.polyfit(np.log(eta), np.log(vals), 1)
    return SlopeFit(float(order), float(math.exp(logc)))


def classify_scalar(bc: ScalarBC) -> StabilityReport:
    coeffs = {"a": bc.a, "b": bc.b}
    S = StabilityClass
    if bc.kind is BCType.TYPE1:
        if bc.a == 0:
            raise ValueError("type1 with a = 0 has no normal derivative; no classification is available")
        if bc.a < 0:
            evs = eigenvalue_search(bc)
            return StabilityReport(
                S.ILL_POSED,
                notes=(
                    f"a < 0 reverses the boundary term; eigenvalue scan found {len(evs)} zeros with Re s' > 0"
                    + (f", the first {MAX_LISTED} are listed" if len(evs) > MAX_LISTED else "")
                ),
                eigenvalues=[p.s for p in evs[:MAX_LISTED]],
                label=bc.label,
                coefficients=coeffs,
            )
        return StabilityReport(
            S.STRONGLY_BOUNDARY_STABLE,
            notes="no generalized eigenvalues; one derivative gained on the boundary",
            holds=(S.STRONGLY_BOUNDARY_STABLE, S.STABLE),
            label=bc.label,
            coefficients=coeffs,
        )
    ges = generalized_eigenvalues(bc)
    if bc.kind is BCType.TYPE2:
        return StabilityReport(
            S.STABLE,
            ges,
            notes="surface waves decaying away from the boundary; boundary estimate loses 1/eta",
            holds=(S.BOUNDARY_STABLE, S.STABLE),
            label=bc.label,
            coefficients=coeffs,
        )
    if bc.kind is BCType.TYPE3:
        return StabilityReport(
            S.STABLE,
            ges,
            notes="glancing waves constant in the normal direction",
            holds=(S.BOUNDARY_STABLE, S.STABLE),
            label=bc.label,
            coefficients=coeffs,
        )
    return StabilityReport(
        S.UNSTABLE,
        ges,
        notes="oscillatory boundary waves; one derivative lost per reflection",
        holds=(S.BOUNDARY_STABLE, S.UNSTABLE),
        label=bc.label,
        coefficients=coeffs,
    )
