"""Command-line front end: ``python -m wavebc <command> [--flag value ...]``.

Commands: ``analyze``, ``solve``, ``table1``, ``table2``, ``growth``,
``forcing``, ``roots``.  Settings resolve as command-line flags, then a flat
``key = value`` config file (``--config``), then per-command defaults.  Every
run writes ``<command>-<hash>.csv`` (or ``.txt`` for reports) into the output
directory and records its resolved settings in ``manifest.txt``.

Exit status: 0 success, 1 I/O error, 2 configuration error, 3 divergence,
4 analysis failure.
"""

from __future__ import annotations

import dataclasses
import hashlib
import math
import sys
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from . import experiments as ex
from .coupled import CoupledBC, SingularBoundarySystem, classify_coupled
from .fd import MAX_COURANT, BoundaryCoefficient, Diverged, Grid2D, run
from .io import fmt, write_csv, write_snapshot_columns
from .reflection import NoConvergence, reflection_roots
from .report import format_reports
from .scalar import BCType, ScalarBC, classify_scalar
from .solutions import OMEGA0, PULSE_T0, PULSE_WIDTH, GaussianPulse, SurfaceWave, TravelingWave
from .systems import DegenerateSpectrum, SplitFailure, SystemSpec, build_first_order_symbol, eigen_split, resolvent_product

__all__ = [
    "COMMANDS",
    "EXIT_OK",
    "EXIT_IO",
    "EXIT_CONFIG",
    "EXIT_DIVERGED",
    "EXIT_ANALYSIS",
    "ConfigError",
    "UnknownFlag",
    "InvalidValue",
    "ConflictingOptions",
    "RunConfig",
    "parse_config",
    "serialize",
    "config_hash",
    "dispatch",
    "main",
]

COMMANDS = ("analyze", "solve", "table1", "table2", "growth", "forcing", "roots")
EXIT_OK, EXIT_IO, EXIT_CONFIG, EXIT_DIVERGED, EXIT_ANALYSIS = 0, 1, 2, 3, 4


class ConfigError(ValueError):
    pass


class UnknownFlag(ConfigError):
    def __init__(self, key: str):
        super().__init__(f"unknown option {key!r}")
        self.key = key


class InvalidValue(ConfigError):
    def __init__(self, key: str, value, reason: str = ""):
        msg = f"invalid value {value!r} for {key!r}"
        super().__init__(f"{msg}: {reason}" if reason else msg)
        self.key = key
        self.value = value


class ConflictingOptions(ConfigError):
    pass


def _floats(text) -> tuple[float, ...]:
    if isinstance(text, (tuple, list)):
        return tuple(float(v) for v in text)
    return tuple(float(v) for v in str(text).replace(";", ",").split(",") if v.strip())


def _matrix(text) -> tuple[tuple[float, ...], ...]:
    """``"1 0; 0 4"`` -> ((1, 0), (0, 4))."""
    if isinstance(text, tuple):
        return text
    rows = [r.replace(",", " ").split() for r in str(text).split(";") if r.strip()]
    return tuple(tuple(float(v) for v in r) for r in rows)


def _matrices(text) -> tuple:
    if isinstance(text, tuple):
        return text
    return tuple(_matrix(block) for block in str(text).split("|") if block.strip())


def _bool(text) -> bool:
    if isinstance(text, bool):
        return text
    t = str(text).strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise ValueError("expected a boolean")


def _opt_int(text):
    if text is None or str(text).strip().lower() in ("", "none"):
        return None
    return int(text)


def _opt_complex(text):
    return complex(str(text).replace(" ", "").replace("i", "j"))


@dataclass(frozen=True)
class RunConfig:
    command: str = "analyze"
    # boundary condition
    bc: str = "type3"
    a: float = 1.0
    b: str = "0"
    b1: float = 0.0
    b2: float = 0.0
    flagged: bool = False
    grid_density: int = 32
    # general system (bc = system)
    A1: tuple = ((1.0,),)
    B: tuple = (((1.0,),),)
    s: complex = 1 + 0j
    omega: tuple = (1.0,)
    # experiments
    problem: str = "pulse"
    beta: tuple = (0.5,)
    omega0: float = OMEGA0
    variant: str = "G"
    t0: float = PULSE_T0
    width: float = PULSE_WIDTH
    # grid and time
    h: tuple = (5e-3,)
    N: int | None = None
    courant: float = 0.5
    t_end: float = 1.0
    sample_dt: float = 0.25
    # roots
    case: str = "loss"
    n: int = 5
    out: str = "."


_CONVERT = {
    "command": str,
    "bc": str,
    "a": float,
    "b": str,
    "b1": float,
    "b2": float,
    "flagged": _bool,
    "grid_density": int,
    "A1": _matrix,
    "B": _matrices,
    "s": _opt_complex,
    "omega": _floats,
    "problem": str,
    "beta": _floats,
    "omega0": float,
    "variant": str,
    "t0": float,
    "width": float,
    "h": _floats,
    "N": _opt_int,
    "courant": float,
    "t_end": float,
    "sample_dt": float,
    "case": str,
    "n": int,
    "out": str,
}

COMMAND_DEFAULTS = {
    "analyze": {},
    "solve": {"t_end": 1.0, "h": (5e-3,)},
    "table1": {"b": "0,0.5,i0.5", "h": ex.TABLE_H},
    "table2": {"beta": (0.5, 0.9, 0.99), "h": ex.TABLE_H},
    "growth": {"b": "0.5", "h": (1e-2, 5e-3), "t_end": 20.0},
    "forcing": {"beta": (0.5, 0.9, 0.99), "h": (2.5e-3,), "t_end": 4.0},
    "roots": {},
}

SCALAR_KEYS = {"a", "b", "flagged"}
COUPLED_KEYS = {"b1", "b2"}
SYSTEM_KEYS = {"A1", "B", "s", "omega"}


def _key(raw: str) -> str:
    # case matters: b/B and n/N are different settings
    k = raw.strip().lstrip("-").replace("-", "_")
    if k not in _CONVERT:
        raise UnknownFlag(raw)
    return k


def _read_config_text(text: str) -> dict[str, str]:
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidValue(f"line {lineno}", raw, "expected key = value")
        k, _, v = line.partition("=")
        out[_key(k)] = v.strip()
    return out


def _tokens(argv) -> tuple[dict[str, str], str | None, str | None]:
    """Split argv into ``{key: value}``, the positional command and ``--config``."""
    argv = list(argv)
    vals, command, config = {}, None, None
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok.startswith("--"):
            name, eq, val = tok[2:].partition("=")
            if not eq:
                if i + 1 >= len(argv):
                    raise InvalidValue(tok, None, "missing value")
                val = argv[i + 1]
                i += 1
            if name == "config":
                config = val
            else:
                vals[_key(name)] = val
        elif command is None:
            command = tok
        else:
            raise UnknownFlag(tok)
        i += 1
    return vals, command, config


def parse_config(argv=(), config_text: str | None = None) -> RunConfig:
    """Resolve a :class:`RunConfig` from flags, an optional config file and defaults."""
    flags, command, config_path = _tokens(argv)
    file_vals = {}
    if config_path is not None:
        try:
            file_vals = _read_config_text(Path(config_path).read_text())
        except OSError as exc:
            raise InvalidValue("config", config_path, exc.strerror or str(exc)) from exc
    if config_text is not None:
        file_vals.update(_read_config_text(config_text))
    if command is not None and "command" in flags:
        raise ConflictingOptions("command given both positionally and as --command")
    if command is not None:
        flags["command"] = command
    merged = {**file_vals, **flags}
    cmd = merged.get("command", RunConfig.command)
    if cmd not in COMMANDS:
        raise InvalidValue("command", cmd, f"expected one of {', '.join(COMMANDS)}")
    defaults = {k: _CONVERT[k](v) for k, v in COMMAND_DEFAULTS[cmd].items()}
    kwargs = dict(defaults)
    for k, v in merged.items():
        try:
            kwargs[k] = _CONVERT[k](v)
        except (TypeError, ValueError) as exc:
            raise InvalidValue(k, v, str(exc)) from exc
    cfg = RunConfig(**kwargs)
    # a key counts as set only if it moves away from the command default, so
    # that a serialized config (which lists every key) parses back cleanly
    base = RunConfig(command=cmd, **defaults)
    explicit = {k for k in merged if getattr(cfg, k) != getattr(base, k)}
    _validate(cfg, explicit)
    return cfg


def _validate(cfg: RunConfig, explicit: set[str]) -> None:
    def bad(key, reason):
        raise InvalidValue(key, getattr(cfg, key), reason)

    if cfg.command == "analyze":
        kinds = {k.value for k in BCType} | {"coupled", "system"}
        if cfg.bc not in kinds:
            bad("bc", f"expected one of {', '.join(sorted(kinds))}")
        groups = {"scalar": SCALAR_KEYS, "coupled": COUPLED_KEYS, "system": SYSTEM_KEYS}
        own = "scalar" if cfg.bc.startswith("type") else cfg.bc
        for name, keys in groups.items():
            clash = sorted(explicit & keys - groups[own])
            if name != own and clash:
                raise ConflictingOptions(f"bc = {cfg.bc} conflicts with {', '.join(clash)}")
        if own == "scalar":
            try:
                b = float(cfg.b)
            except ValueError:
                bad("b", "scalar analysis needs a real b")
            sb = ScalarBC(BCType(cfg.bc), cfg.a, b, flagged=True)
            if sb.violation() and not cfg.flagged:
                bad("b" if "b" in sb.violation() else "a", sb.violation() + " (pass --flagged true to analyze anyway)")
        if own == "system":
            try:
                _system(cfg)
            except ValueError as exc:
                bad("A1", str(exc))
            if not cfg.s.real > 0:
                bad("s", "needs Re s > 0")
        if cfg.grid_density < 16:
            bad("grid_density", "must be >= 16")
        return

    if explicit & (COUPLED_KEYS | SYSTEM_KEYS | {"bc", "a", "flagged"}):
        raise ConflictingOptions(
            f"{cfg.command} takes the strip coefficient --b only, not {', '.join(sorted(explicit & (COUPLED_KEYS | SYSTEM_KEYS | {'bc', 'a', 'flagged'})))}"
        )
    if not 0 < cfg.courant <= MAX_COURANT:
        bad("courant", f"must lie in (0, {MAX_COURANT:.6f}] for stability")
    if not cfg.t_end >= 0 or not math.isfinite(cfg.t_end):
        bad("t_end", "must be a nonnegative number")
    if cfg.command == "roots":
        if cfg.case not in ("loss", "gain"):
            bad("case", "expected loss or gain")
        if cfg.n < 1:
            bad("n", "must be >= 1")
        return
    if not cfg.h or any(not h > 0 for h in cfg.h):
        bad("h", "grid sizes must be positive")
    for h in cfg.h:
        try:
            Grid2D.from_h(h, cfg.courant)
        except ValueError as exc:
            bad("h", str(exc))
    if cfg.N is not None:
        try:
            g = Grid2D(cfg.N, cfg.courant)
        except ValueError as exc:
            bad("N", str(exc))
        if "h" in explicit and any(abs(h - g.h) > 1e-12 for h in cfg.h):
            raise ConflictingOptions(f"N = {cfg.N} and h = {cfg.h} disagree")
    for part in cfg.b.split(","):
        try:
            BoundaryCoefficient.parse(part)
        except ValueError as exc:
            bad("b", str(exc))
    if cfg.command == "solve" and cfg.problem not in ("pulse", "traveling", "surface"):
        bad("problem", "expected pulse, traveling or surface")
    if cfg.command in ("table2", "forcing") or (cfg.command == "solve" and cfg.problem == "surface"):
        for beta in cfg.beta:
            try:
                SurfaceWave(beta, cfg.omega0)
            except ValueError as exc:
                bad("beta", str(exc))
    if cfg.command == "forcing" and cfg.variant not in ("G", "Gt", "Gtt"):
        bad("variant", "expected G, Gt or Gtt")
    if cfg.command == "growth":
        for part in cfg.b.split(","):
            if BoundaryCoefficient.parse(part).mode == "imaginary":
                bad("b", "growth study takes a real b")
        if not cfg.sample_dt > 0:
            bad("sample_dt", "must be positive")


def _system(cfg: RunConfig) -> SystemSpec:
    return SystemSpec(np.array(cfg.A1, dtype=float), [np.array(b, dtype=float) for b in cfg.B])


def _render(key: str, value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, complex):
        return f"{fmt(value.real)}{'+' if value.imag >= 0 else '-'}{fmt(abs(value.imag))}i"
    if isinstance(value, float):
        return fmt(value)
    if key == "A1":
        return "; ".join(" ".join(fmt(v) for v in row) for row in value)
    if key == "B":
        return " | ".join("; ".join(" ".join(fmt(v) for v in row) for row in m) for m in value)
    if isinstance(value, tuple):
        return ",".join(fmt(v) for v in value)
    return str(value)


def serialize(cfg: RunConfig) -> str:
    """Config-file text that :func:`parse_config` reads back to an equal config."""
    return "".join(f"{f.name} = {_render(f.name, getattr(cfg, f.name))}\n" for f in fields(cfg))


def config_hash(cfg: RunConfig) -> str:
    text = serialize(dataclasses.replace(cfg, out="."))
    return hashlib.sha256(text.encode()).hexdigest()[:12]


def _grids(cfg: RunConfig) -> list[Grid2D]:
    if cfg.N is not None:
        return [Grid2D(cfg.N, cfg.courant)]
    return [Grid2D.from_h(h, cfg.courant) for h in cfg.h]


def _update_manifest(path: Path, run_id: str, entries: dict[str, str]) -> None:
    sections: dict[str, list[str]] = {}
    current = None
    if path.exists():
        for line in path.read_text().splitlines():
            if line.startswith("[") and line.endswith("]"):
                current = line[1:-1]
                sections[current] = []
            elif current is not None and line.strip():
                sections[current].append(line)
    sections[run_id] = [f"{k} = {entries[k]}" for k in sorted(entries)]
    body = "\n\n".join(f"[{rid}]\n" + "\n".join(lines) for rid, lines in sections.items())
    path.write_text(body + "\n")


def _analyze(cfg: RunConfig, stem: Path) -> tuple[Path, str]:
    if cfg.bc.startswith("type"):
        bc = ScalarBC(BCType(cfg.bc), cfg.a if cfg.bc == "type1" else 0.0, float(cfg.b), flagged=cfg.flagged)
        report = classify_scalar(bc)
    elif cfg.bc == "coupled":
        report = classify_coupled(CoupledBC(cfg.b1, cfg.b2))
    else:
        sys_ = _system(cfg)
        split = eigen_split(build_first_order_symbol(sys_, cfg.s, cfg.omega))
        prod = resolvent_product(sys_, cfg.s, cfg.omega)
        path = stem.with_suffix(".txt")
        path.write_text(
            "[system]\n"
            f"n = {sys_.n}\n"
            f"s = {_render('s', cfg.s)}\n"
            f"omega = {_render('omega', cfg.omega)}\n"
            f"n_minus = {split.n_minus}\n"
            f"n_plus = {split.n_plus}\n"
            f"resolvent_product = {fmt(prod)}\n"
        )
        return path, f"split ({split.n_minus}, {split.n_plus}), resolvent product {prod:.6g}"
    path = stem.with_suffix(".txt")
    path.write_text(format_reports([report]))
    return path, report.classification.value


def _solve(cfg: RunConfig, stem: Path) -> tuple[Path, str]:
    grid = _grids(cfg)[0]
    bc = BoundaryCoefficient.parse(cfg.b)
    if cfg.problem == "pulse":
        data = GaussianPulse(cfg.width).problem_data(grid)
    elif cfg.problem == "traveling":
        data = TravelingWave(bc.ncomponents == 2).problem_data(grid, bc)
    else:
        wave = SurfaceWave(cfg.beta[0], cfg.omega0)
        bc, data = wave.boundary(), wave.problem_data(grid)
    every = max(1, int(round(cfg.sample_dt / grid.dt)))
    res = run(grid, bc, data, cfg.t_end, every=every)
    path = stem.with_suffix(".csv")
    write_csv(path, ["step", "time", "value"], zip(res.steps, res.times, res.values("maxnorm")))
    write_snapshot_columns(stem.with_name(stem.name + "-snapshot.txt"), res.fields, grid)
    return path, f"{res.steps[-1]} steps, final max norm {res.values('maxnorm')[-1]:.6g}"


def _table1(cfg: RunConfig, stem: Path):
    rows = []
    for part in cfg.b.split(","):
        rows += ex.traveling_wave_suite(BoundaryCoefficient.parse(part), cfg.h, cfg.courant)
    path = ex.write_convergence_csv(stem.with_suffix(".csv"), rows)
    return path, f"{len(rows)} rows"


def _table2(cfg: RunConfig, stem: Path):
    rows = []
    for beta in cfg.beta:
        rows += ex.surface_wave_suite(beta, cfg.omega0, cfg.h, cfg.courant)
    path = ex.write_convergence_csv(stem.with_suffix(".csv"), rows)
    return path, f"{len(rows)} rows"


def _growth(cfg: RunConfig, stem: Path):
    series = ex.growth_study(float(cfg.b.split(",")[0]), cfg.h, cfg.t_end, cfg.sample_dt, cfg.courant)
    path = ex.write_series_table(stem.with_suffix(".csv"), series)
    return path, ", ".join(f"h={h:g}: {s.values[-1]:.6g}" for h, s in series.items())


def _forcing(cfg: RunConfig, stem: Path):
    grid = _grids(cfg)[0]
    series = ex.forcing_family_study(cfg.beta, cfg.variant, grid, cfg.t_end, cfg.omega0, cfg.t0)
    path = ex.write_forcing_csv(stem.with_suffix(".csv"), cfg.variant, series)
    return path, ", ".join(f"beta={b:g}: peak {s.peak:.6g}" for b, s in series.items())


def _roots(cfg: RunConfig, stem: Path):
    roots = reflection_roots(cfg.case, cfg.n)
    rows = ((r.n, r.lam.real, r.lam.imag, r.residual) for r in roots)
    path = write_csv(stem.with_suffix(".csv"), ["n", "re_lambda", "im_lambda", "residual"], rows)
    return path, f"{len(roots)} roots, max residual {max(r.residual for r in roots):.3g}"


_HANDLERS = {
    "analyze": _analyze,
    "solve": _solve,
    "table1": _table1,
    "table2": _table2,
    "growth": _growth,
    "forcing": _forcing,
    "roots": _roots,
}


@dataclass
class DispatchResult:
    status: int
    artifact: Path | None = None
    message: str = ""


def _manifest_entries(cfg: RunConfig, artifact: Path | None) -> dict[str, str]:
    entries = {f.name: _render(f.name, getattr(cfg, f.name)) for f in fields(cfg)}
    if cfg.command in ("solve", "table1", "table2", "growth", "forcing"):
        grids = _grids(cfg)
        entries["grid_N"] = ",".join(str(g.N) for g in grids)
        entries["dt"] = ",".join(fmt(g.dt) for g in grids)
    entries["artifact"] = artifact.name if artifact else "none"
    return entries


def dispatch(cfg: RunConfig) -> DispatchResult:
    out = Path(cfg.out)
    run_id = f"{cfg.command}-{config_hash(cfg)}"
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        return DispatchResult(EXIT_IO, None, f"cannot create {out}: {exc.strerror or exc}")
    stem = out / run_id
    try:
        artifact, msg = _HANDLERS[cfg.command](cfg, stem)
        status = EXIT_OK
    except Diverged as exc:
        artifact, msg, status = None, f"diverged: {exc}", EXIT_DIVERGED
    except (SplitFailure, DegenerateSpectrum, NoConvergence, SingularBoundarySystem, np.linalg.LinAlgError) as exc:
        artifact, msg, status = None, f"analysis failed: {exc}", EXIT_ANALYSIS
    except OSError as exc:
        return DispatchResult(EXIT_IO, None, f"I/O error at {exc.filename or out}: {exc.strerror or exc}")
    entries = _manifest_entries(cfg, artifact)
    entries["status"] = str(status)
    try:
        _update_manifest(out / "manifest.txt", run_id, entries)
    except OSError as exc:
        return DispatchResult(EXIT_IO, artifact, f"cannot write {out / 'manifest.txt'}: {exc.strerror or exc}")
    return DispatchResult(status, artifact, msg)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if not argv or argv[0] in ("-h", "--help"):
        print(__doc__.strip())
        return EXIT_OK
    try:
        cfg = parse_config(argv)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    res = dispatch(cfg)
    stream = sys.stdout if res.status == EXIT_OK else sys.stderr
    where = f"{res.artifact}: " if res.artifact else ""
    print(f"{where}{res.message}", file=stream)
    return res.status
