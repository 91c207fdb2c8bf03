"""Convergence tables, growth studies and the boundary-forcing family."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .fd import BoundaryCoefficient, FieldPair, Grid2D, run
from .io import write_csv
from .solutions import OMEGA0, PULSE_T0, ForcingFamily, GaussianPulse, SurfaceWave, TravelingWave

__all__ = [
    "TABLE_H",
    "ConvergenceRow",
    "Series",
    "max_norm_error",
    "error_monitor",
    "traveling_wave_suite",
    "surface_wave_suite",
    "growth_study",
    "forcing_family_study",
    "convergence_order",
    "write_convergence_csv",
    "write_forcing_csv",
    "write_series_table",
]

TABLE_H = (1e-2, 5e-3, 2.5e-3)


@dataclass(frozen=True)
class ConvergenceRow:
    case: str
    h: float
    err_t1: float
    err_t10: float
    phase_wrapped: bool = False

    def __post_init__(self):
        if not (self.err_t1 >= 0 and self.err_t10 >= 0):
            raise ValueError("errors must be nonnegative")


@dataclass
class Series:
    """Max-norm time series of one run."""

    label: str
    times: np.ndarray
    values: np.ndarray

    def at(self, t: float) -> float:
        return float(self.values[int(np.argmin(np.abs(self.times - t)))])

    @property
    def peak(self) -> float:
        return float(self.values.max())


def max_norm_error(fields: FieldPair, grid: Grid2D, exact, t: float) -> float:
    """Max over physical nodes and components of ``|v - exact(x, y, t)|``.

    Component 1 is compared with the real part of ``exact``, component 2 with
    the imaginary part.
    """
    N = grid.N
    ex = np.asarray(exact(grid.x[1 : N + 1, None], grid.y[None, 0 : N - 1], t))
    err = float(np.abs(fields.current[0, 1 : N + 1, 0 : N - 1] - ex.real).max())
    if fields.ncomponents == 2:
        err = max(err, float(np.abs(fields.current[1, 1 : N + 1, 0 : N - 1] - ex.imag).max()))
    return err


def error_monitor(exact):
    def monitor(fields: FieldPair, grid: Grid2D) -> float:
        return max_norm_error(fields, grid, exact, fields.n * grid.dt)

    return monitor


def _errors_at(grid, bc, data, exact, times=(1.0, 10.0)):
    res = run(grid, bc, data, max(times), {"err": error_monitor(exact)}, at_times=times)
    return [float(res.at("err", t, tol=0.5 * grid.dt)) for t in times]


def traveling_wave_suite(bc: BoundaryCoefficient, h_list=TABLE_H, courant: float = 0.5) -> list[ConvergenceRow]:
    """Errors at t = 1 and t = 10 against the traveling wave, one row per h."""
    sol = TravelingWave(two_component=bc.ncomponents == 2)
    rows = []
    for h in h_list:
        grid = Grid2D.from_h(h, courant)
        e1, e10 = _errors_at(grid, bc, sol.problem_data(grid, bc), sol.u)
        rows.append(ConvergenceRow(f"b={bc.label}", h, e1, e10))
    return rows


def surface_wave_suite(beta: float, omega0: float = OMEGA0, h_list=TABLE_H, courant: float = 0.5) -> list[ConvergenceRow]:
    """Errors against the surface wave with homogeneous forcing.

    The x = 1 condition is only approximately satisfied by the surface wave,
    so the reference is exact up to ``exp(-|beta omega0|)``.  A row is flagged
    ``phase_wrapped`` when its t = 10 error exceeds the unit wave amplitude.
    """
    sol = SurfaceWave(beta, omega0)
    bc = sol.boundary()
    rows = []
    for h in h_list:
        grid = Grid2D.from_h(h, courant)
        e1, e10 = _errors_at(grid, bc, sol.problem_data(grid), sol.u)
        rows.append(ConvergenceRow(f"beta={beta:g}", h, e1, e10, phase_wrapped=e10 > 1.0))
    return rows


def growth_study(b: float, h_list=(1e-2, 5e-3), t_end: float = 20.0, sample_dt: float = 0.25, courant: float = 0.5) -> dict[float, Series]:
    """Max norm of the Gaussian-pulse run every ``sample_dt`` for each h."""
    bc = BoundaryCoefficient.real(b)
    out = {}
    for h in h_list:
        grid = Grid2D.from_h(h, courant)
        every = int(round(sample_dt / grid.dt))
        if abs(every * grid.dt - sample_dt) > 1e-9:
            raise ValueError(f"sample interval {sample_dt} is not a multiple of dt = {grid.dt}")
        res = run(grid, bc, GaussianPulse().problem_data(grid), t_end, every=every)
        out[h] = Series(f"b={bc.label},h={h:g}", res.times, res.values("maxnorm"))
    return out


def forcing_family_study(
    beta_list, variant: str, grid: Grid2D, t_end: float = 4.0, omega0: float = OMEGA0, t0: float = PULSE_T0
) -> dict[float, Series]:
    """Max norm at every time level for zero initial data and boundary forcing G, G_t or G_tt."""
    out = {}
    for beta in beta_list:
        fam = ForcingFamily(beta, variant, omega0, t0)
        res = run(grid, fam.boundary(), fam.problem_data(grid), t_end, monitors={}, track_peak=True)
        times = np.arange(res.peaks.size) * grid.dt
        out[beta] = Series(f"beta={beta:g},{variant}", times, res.peaks)
    return out


def convergence_order(h, err) -> float:
    """Least-squares slope of log(err) against log(h)."""
    h, err = np.asarray(h, dtype=float), np.asarray(err, dtype=float)
    if h.size < 2:
        raise ValueError("need at least two grids")
    return float(np.polyfit(np.log(h), np.log(err), 1)[0])


def write_convergence_csv(path, rows) -> Path:
    return write_csv(path, ["case", "h", "err_t1", "err_t10"], ((r.case, r.h, r.err_t1, r.err_t10) for r in rows))


def write_forcing_csv(path, variant: str, series: dict[float, Series]) -> Path:
    rows = ((beta, variant, t, v) for beta, s in series.items() for t, v in zip(s.times, s.values))
    return write_csv(path, ["beta", "variant", "time", "maxnorm"], rows)


def write_series_table(path, series: dict[float, Series]) -> Path:
    """Growth-study series as ``h,time,maxnorm``."""
    rows = ((h, t, v) for h, s in series.items() for t, v in zip(s.times, s.values))
    return write_csv(path, ["h", "time", "maxnorm"], rows)
