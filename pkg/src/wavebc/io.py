"""Plain-text artifacts: snapshots, monitor series, tables and manifests."""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .fd import FieldPair, Grid2D

__all__ = [
    "fmt",
    "write_snapshot_matrix",
    "write_snapshot_columns",
    "read_snapshot_matrix",
    "write_series_csv",
    "write_csv",
    "write_manifest",
    "read_manifest",
]


def fmt(x) -> str:
    """17 significant digits: reads back to the identical double."""
    return format(float(x), ".17g")


def _physical(fields: FieldPair, grid: Grid2D, component: int) -> np.ndarray:
    N = grid.N
    return fields.current[component, 1 : N + 1, 0 : N - 1]


def write_snapshot_matrix(path, fields: FieldPair, grid: Grid2D, component: int = 0) -> Path:
    """One grid row ``j`` per line over the physical nodes."""
    path = Path(path)
    np.savetxt(path, _physical(fields, grid, component), fmt="%.17g")
    return path


def read_snapshot_matrix(path) -> np.ndarray:
    return np.loadtxt(path, ndmin=2)


def write_snapshot_columns(path, fields: FieldPair, grid: Grid2D, component: int = 0) -> Path:
    """Lines ``x y value`` over the physical nodes."""
    path = Path(path)
    N = grid.N
    X, Y = np.meshgrid(grid.x[1 : N + 1], grid.y[0 : N - 1], indexing="ij")
    data = np.column_stack([X.ravel(), Y.ravel(), _physical(fields, grid, component).ravel()])
    np.savetxt(path, data, fmt="%.17g", header="x y value", comments="")
    return path


def write_series_csv(path, steps, times, values) -> Path:
    return write_csv(path, ["step", "time", "value"], zip(steps, times, values))


def write_csv(path, header, rows) -> Path:
    path = Path(path)
    try:
        with path.open("w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            for row in rows:
                w.writerow([v if isinstance(v, (str, int, np.integer)) else fmt(v) for v in row])
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc
    return path


def write_manifest(path, entries: dict) -> Path:
    """Flat ``key = value`` lines, keys sorted."""
    path = Path(path)
    lines = [f"{k} = {entries[k]}" for k in sorted(entries)]
    try:
        path.write_text("\n".join(lines) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc
    return path


def read_manifest(path) -> dict[str, str]:
    out = {}
    for line in Path(path).read_text().splitlines():
        if line.strip() and not line.lstrip().startswith("#"):
            k, _, v = line.partition("=")
            out[k.strip()] = v.strip()
    return out
