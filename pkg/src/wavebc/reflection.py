"""Roots of the one-dimensional reflection problem on ``0 <= x <= 1``.

Two wave equations coupled only through their boundary conditions admit
solutions ``exp(lambda (t + x))`` exactly when

    loss:  exp(2 lambda) = -lambda**2
    gain:  exp(2 lambda) = -1 / lambda**2

Writing ``lambda = i pi n + offset`` removes the ``exp(2 i pi n) = 1`` factor,
so Newton runs on the O(log n) offset instead of on ``lambda`` itself;
iterating on ``lambda`` directly stalls once ``ulp(Im lambda) * |f'|`` exceeds
the target.  Near ``n = 100`` even one ulp of the offset moves the residual by
about 1e-10, so a final Newton step in 40-digit arithmetic rounds the offset
to the nearest double, and residuals are evaluated at that precision.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import mpmath

__all__ = ["ReflectionRoot", "NoConvergence", "reflection_root", "reflection_roots"]

MAX_STEPS = 100


class NoConvergence(ArithmeticError):
    pass


_DPS = 40


def _mp_parts(case: str, n: int, z):
    lam = mpmath.mpc(0, mpmath.pi * n) + z
    e = mpmath.exp(2 * z)
    if case == "loss":
        return e + lam * lam, 2 * e + 2 * lam
    return e + lam**-2, 2 * e - 2 * lam**-3


def _residual(case: str, n: int, offset: complex) -> float:
    with mpmath.workdps(_DPS):
        f, _ = _mp_parts(case, n, mpmath.mpc(offset.real, offset.imag))
        return float(abs(f))


def _polish(case: str, n: int, offset: complex) -> complex:
    with mpmath.workdps(_DPS):
        z = mpmath.mpc(offset.real, offset.imag)
        for _ in range(3):
            f, df = _mp_parts(case, n, z)
            z -= f / df
        return complex(z)


@dataclass(frozen=True)
class ReflectionRoot:
    n: int
    case: str
    offset: complex

    @property
    def lam(self) -> complex:
        return complex(0.0, math.pi * self.n) + self.offset

    @property
    def residual(self) -> float:
        return _residual(self.case, self.n, self.offset)


def reflection_root(case: str, n: int, tol: float = 1e-10) -> ReflectionRoot:
    case = case.lower()
    if case not in ("loss", "gain"):
        raise ValueError(f"case must be 'loss' or 'gain', got {case!r}")
    if n < 1:
        raise ValueError("n must be >= 1")
    z = complex(math.log(math.pi * n) if case == "loss" else -math.log(math.pi * n))
    ipn = complex(0.0, math.pi * n)
    for _ in range(MAX_STEPS):
        lam = ipn + z
        e = cmath.exp(2.0 * z)
        if case == "loss":
            f, df = e + lam * lam, 2.0 * e + 2.0 * lam
        else:
            f, df = e + lam**-2, 2.0 * e - 2.0 * lam**-3
        dz = f / df
        z -= dz
        if abs(dz) <= 1e-14 * max(1.0, abs(z)):
            break
    root = ReflectionRoot(n, case, _polish(case, n, z))
    if root.residual < tol:
        return root
    raise NoConvergence(f"{case} root n={n}: residual {root.residual:.3g} after {MAX_STEPS} steps")


def reflection_roots(case: str, n_max: int, tol: float = 1e-10) -> list[ReflectionRoot]:
    """Roots for ``n = 1..n_max``."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return [reflection_root(case, n, tol) for n in range(1, n_max + 1)]
