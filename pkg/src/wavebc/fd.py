"""Leapfrog scheme for ``u_tt = u_xx + u_yy + F`` on ``0 <= x <= 1``, periodic in y.

Boundary conditions::

    x = 0:   u_x - b u_y = g0(y, t)
    x = 1:   u_x         = g1(y, t)

Grid: ``h = 1/(N-1)``, ``x_j = (j-1) h`` for ``j = 0..N+1`` (``j = 0`` and
``j = N+1`` are ghost columns) and ``y_k = k h`` for ``k = 0..N`` with the
periodic identification ``v[:, 0] = v[:, N-1]`` and ``v[:, N] = v[:, 1]``.
Arrays are indexed ``[component, j, k]``.

Both boundary conditions are imposed with centered differences by solving for
the ghost value.  Imaginary ``b = i*beta`` is handled in real arithmetic by
splitting ``u = u1 + i u2`` into two components coupled only through the
x = 0 closure.  Problem-data callables may return complex values; the real
part drives component 1 and the imaginary part component 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np

from ._kernels import NO_FORCING, leapfrog_interior

__all__ = [
    "MAX_COURANT",
    "DIVERGENCE_THRESHOLD",
    "Grid2D",
    "BoundaryCoefficient",
    "ProblemData",
    "FieldPair",
    "Diverged",
    "RunResult",
    "initialize",
    "apply_boundary_closure",
    "step",
    "run",
    "max_norm",
    "discrete_energy",
]

MAX_COURANT = 0.99 / math.sqrt(2.0)
DIVERGENCE_THRESHOLD = 1e12


@dataclass(frozen=True)
class Grid2D:
    N: int
    courant: float = 0.5

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 8:
            raise ValueError(f"N must be an integer >= 8, got {self.N!r}")
        object.__setattr__(self, "N", int(self.N))
        if not 0.0 < self.courant <= MAX_COURANT:
            raise ValueError(f"courant factor {self.courant!r} outside (0, {MAX_COURANT:.6f}]")

    @classmethod
    def from_h(cls, h: float, courant: float = 0.5) -> "Grid2D":
        if not h > 0:
            raise ValueError("h must be positive")
        N = int(round(1.0 / h)) + 1
        if abs(1.0 / (N - 1) - h) > 1e-9 * h:
            raise ValueError(f"h = {h!r} is not of the form 1/(N-1)")
        return cls(N, courant)

    @property
    def h(self) -> float:
        return 1.0 / (self.N - 1)

    @property
    def dt(self) -> float:
        return self.courant * self.h

    @property
    def x(self) -> np.ndarray:
        return (np.arange(self.N + 2) - 1) * self.h

    @property
    def y(self) -> np.ndarray:
        return np.arange(self.N + 1) * self.h

    def steps_to(self, t: float) -> int:
        """Number of steps to reach ``t``: ``ceil(t/dt)``, robust to round-off."""
        return max(0, math.ceil(t / self.dt - 1e-9))


@dataclass(frozen=True)
class BoundaryCoefficient:
    """Coefficient ``b`` of the x = 0 condition: zero, real, or purely imaginary."""

    mode: str = "zero"
    value: float = 0.0

    def __post_init__(self):
        if self.mode not in ("zero", "real", "imaginary"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if not math.isfinite(self.value):
            raise ValueError("coefficient must be finite")
        if self.mode == "zero" and self.value != 0:
            raise ValueError("zero mode carries no value")

    @classmethod
    def zero(cls) -> "BoundaryCoefficient":
        return cls("zero", 0.0)

    @classmethod
    def real(cls, b: float) -> "BoundaryCoefficient":
        return cls("real", float(b)) if b != 0 else cls.zero()

    @classmethod
    def imaginary(cls, beta: float) -> "BoundaryCoefficient":
        return cls("imaginary", float(beta)) if beta != 0 else cls.zero()

    @classmethod
    def parse(cls, text: str) -> "BoundaryCoefficient":
        """``"0"``, ``"0.5"``, ``"i0.5"``, ``"0.5i"`` or ``"-i0.5"``."""
        t = str(text).strip().replace(" ", "")
        sign = 1.0
        if t.startswith(("+", "-")) and "i" in t:
            sign = -1.0 if t[0] == "-" else 1.0
            t = t[1:]
        if t.startswith("i") or t.endswith("i") or t.endswith("j"):
            body = t.strip("ij") or "1"
            return cls.imaginary(sign * float(body))
        return cls.real(float(t))

    @property
    def b(self) -> complex:
        return complex(0.0, self.value) if self.mode == "imaginary" else complex(self.value, 0.0)

    @property
    def ncomponents(self) -> int:
        return 2 if self.mode == "imaginary" else 1

    @property
    def label(self) -> str:
        if self.mode == "imaginary":
            return f"i{self.value:g}"
        return f"{self.value:g}"


def _zero_boundary(y, t):
    return 0.0


@dataclass
class ProblemData:
    """Forcings and initial data.

    ``F(x, y, t)`` receives a column ``x`` (interior columns j = 1..N) and a
    row ``y`` (k = 1..N-1) and must broadcast to shape (N, N-1).  ``g0`` and
    ``g1`` receive ``y`` for k = 1..N-1.  ``f1`` and ``f2_prev`` receive the
    full column/row of grid coordinates; ``f2_prev`` is the value at
    ``t = -dt``.  ``F = None`` means no interior forcing.
    """

    F: Callable | None = None
    g0: Callable = _zero_boundary
    g1: Callable = _zero_boundary
    f1: Callable | None = None
    f2_prev: Callable | None = None


@dataclass
class FieldPair:
    current: np.ndarray
    previous: np.ndarray
    n: int = 0

    @property
    def ncomponents(self) -> int:
        return self.current.shape[0]

    def time(self, grid: Grid2D) -> float:
        return self.n * grid.dt

    def copy(self) -> "FieldPair":
        return FieldPair(self.current.copy(), self.previous.copy(), self.n)


class Diverged(RuntimeError):
    def __init__(self, step: int, time: float, value: float):
        super().__init__(f"max norm {value:.6g} exceeds {DIVERGENCE_THRESHOLD:g} at step {step} (t = {time:.6g})")
        self.step = step
        self.time = time
        self.value = value


def _split(values, ncomp: int, shape) -> list[np.ndarray]:
    a = np.broadcast_to(np.asarray(values), shape)
    if ncomp == 1:
        return [np.ascontiguousarray(a.real, dtype=float)]
    return [np.ascontiguousarray(a.real, dtype=float), np.ascontiguousarray(a.imag, dtype=float)]


def _sample(fn, grid: Grid2D, ncomp: int) -> np.ndarray:
    shape = (grid.N + 2, grid.N + 1)
    if fn is None:
        return np.zeros((ncomp,) + shape)
    vals = fn(grid.x[:, None], grid.y[None, :])
    return np.stack(_split(vals, ncomp, shape))


def _periodic(level: np.ndarray, N: int) -> None:
    level[:, :, 0] = level[:, :, N - 1]
    level[:, :, N] = level[:, :, 1]


def _close(level: np.ndarray, grid: Grid2D, bc: BoundaryCoefficient, data: ProblemData, t: float) -> None:
    N, h = grid.N, grid.h
    ncomp = level.shape[0]
    _periodic(level, N)
    yk = grid.y[1:N]
    g0 = _split(data.g0(yk, t), ncomp, (N - 1,))
    g1 = _split(data.g1(yk, t), ncomp, (N - 1,))
    dy = [(level[c, 1, 2:] - level[c, 1, :-2]) / (2.0 * h) for c in range(ncomp)]
    if bc.mode == "imaginary":
        beta = bc.value
        level[0, 0, 1:N] = level[0, 2, 1:N] - 2.0 * h * (g0[0] - beta * dy[1])
        level[1, 0, 1:N] = level[1, 2, 1:N] - 2.0 * h * (g0[1] + beta * dy[0])
    else:
        for c in range(ncomp):
            level[c, 0, 1:N] = level[c, 2, 1:N] - 2.0 * h * (g0[c] + bc.value * dy[c])
    for c in range(ncomp):
        level[c, N + 1, 1:N] = level[c, N - 1, 1:N] + 2.0 * h * g1[c]
    _periodic(level, N)


def initialize(grid: Grid2D, data: ProblemData, bc: BoundaryCoefficient) -> FieldPair:
    """Sample ``f1`` (level 0) and ``f2_prev`` (level -1), then close both levels."""
    ncomp = bc.ncomponents
    cur = _sample(data.f1, grid, ncomp)
    prev = _sample(data.f2_prev, grid, ncomp)
    _close(cur, grid, bc, data, 0.0)
    _close(prev, grid, bc, data, -grid.dt)
    return FieldPair(cur, prev, 0)


def apply_boundary_closure(fields: FieldPair, grid: Grid2D, bc: BoundaryCoefficient, data: ProblemData, t: float) -> None:
    """Refresh periodic rows and ghost columns of the current level at time ``t``."""
    _close(fields.current, grid, bc, data, t)


def step(fields: FieldPair, grid: Grid2D, bc: BoundaryCoefficient, data: ProblemData) -> float:
    """Advance one level in place; returns the interior max |value| of the new level."""
    N, h, dt = grid.N, grid.h, grid.dt
    ncomp = fields.ncomponents
    t = fields.n * dt
    if data.F is None:
        forcing = [NO_FORCING] * ncomp
    else:
        forcing = _split(data.F(grid.x[1 : N + 1, None], grid.y[None, 1:N], t), ncomp, (N, N - 1))
    peak = 0.0
    r2, dt2 = (dt / h) ** 2, dt * dt
    for c in range(ncomp):
        m = leapfrog_interior(fields.current[c], fields.previous[c], forcing[c], r2, dt2)
        peak = m if (m > peak or m != m) else peak
    fields.current, fields.previous = fields.previous, fields.current
    fields.n += 1
    _close(fields.current, grid, bc, data, fields.n * dt)
    return peak


def max_norm(fields: FieldPair, grid: Grid2D) -> float:
    """Max |v| over physical nodes j = 1..N, k = 0..N-1 and all components."""
    N = grid.N
    return float(np.abs(fields.current[:, 1 : N + 1, 0 : N - 1]).max())


def discrete_energy(fields: FieldPair, grid: Grid2D) -> float:
    """Leapfrog energy for the Neumann problem (b = 0).

    ``E = ||D_-t v||^2 + <D+x v^n, D+x v^{n-1}> + <D+y v^n, D+y v^{n-1}>`` with
    trapezoidal weights 1/2 on the columns j = 1 and j = N, summed over the
    N - 1 periodic rows and multiplied by h^2.  Conserved exactly (up to
    round-off) when F = g0 = g1 = 0.
    """
    N, h, dt = grid.N, grid.h, grid.dt
    w = np.ones(N)
    w[0] = w[-1] = 0.5
    rows = slice(1, N)
    total = 0.0
    for c in range(fields.ncomponents):
        vn = fields.current[c, 1 : N + 1, :]
        vp = fields.previous[c, 1 : N + 1, :]
        vt = (vn[:, rows] - vp[:, rows]) / dt
        kin = np.sum(w[:, None] * vt * vt)
        dxn = np.diff(vn[:, rows], axis=0) / h
        dxp = np.diff(vp[:, rows], axis=0) / h
        dyn = (vn[:, 2 : N + 1] - vn[:, 1:N]) / h
        dyp = (vp[:, 2 : N + 1] - vp[:, 1:N]) / h
        total += kin + np.sum(dxn * dxp) + np.sum(w[:, None] * dyn * dyp)
    return float(total * h * h)


Monitor = Callable[[FieldPair, Grid2D], object]


@dataclass
class RunResult:
    steps: np.ndarray
    times: np.ndarray
    series: dict[str, list]
    fields: FieldPair
    peaks: np.ndarray | None = None

    def values(self, name: str) -> np.ndarray:
        return np.asarray(self.series[name])

    def at(self, name: str, t: float, tol: float | None = None):
        """Recorded value at the sample closest to ``t``."""
        i = int(np.argmin(np.abs(self.times - t)))
        if tol is not None and abs(self.times[i] - t) > tol:
            raise KeyError(f"no sample within {tol} of t = {t}")
        return self.series[name][i]


def run(
    grid: Grid2D,
    bc: BoundaryCoefficient,
    data: ProblemData,
    t_end: float,
    monitors: Mapping[str, Monitor] | None = None,
    every: int | None = None,
    at_times=(),
    track_peak: bool = False,
) -> RunResult:
    """Advance ``ceil(t_end/dt)`` steps, recording monitors.

    Monitors are evaluated at step 0, every ``every`` steps (default: only at
    the end), at the steps nearest to each time in ``at_times`` and at the final
    step.  The default monitor set is ``{"maxnorm": max_norm}``.  With
    ``track_peak`` the max norm of every level (free from the interior update)
    is kept in ``RunResult.peaks``; entry ``n`` belongs to ``t = n*dt``.
    """
    if t_end < 0:
        raise ValueError("t_end must be nonnegative")
    monitors = dict(monitors) if monitors is not None else {"maxnorm": max_norm}
    nsteps = grid.steps_to(t_end)
    record = {0, nsteps}
    if every:
        record.update(range(0, nsteps + 1, int(every)))
    record.update(min(nsteps, int(round(t / grid.dt))) for t in at_times)

    fields = initialize(grid, data, bc)
    steps, series = [], {name: [] for name in monitors}

    def sample():
        steps.append(fields.n)
        for name, mon in monitors.items():
            series[name].append(mon(fields, grid))

    sample()
    peaks = np.empty(nsteps + 1) if track_peak else None
    if track_peak:
        peaks[0] = max_norm(fields, grid)
    for _ in range(nsteps):
        peak = step(fields, grid, bc, data)
        if not peak <= DIVERGENCE_THRESHOLD:
            raise Diverged(fields.n, fields.n * grid.dt, peak)
        if track_peak:
            peaks[fields.n] = peak
        if fields.n in record:
            sample()
    steps_arr = np.asarray(steps)
    return RunResult(steps_arr, steps_arr * grid.dt, series, fields, peaks)
