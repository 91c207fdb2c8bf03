"""Stability verdicts, generalized eigenvalues and the plain-text report format.

A report file is a sequence of records separated by blank lines::

    [report]
    bc = type2
    a = 0
    b = 0.59999999999999998
    classification = Stable
    holds = BoundaryStable,Stable
    generalized_eigenvalue = 0.62469504755442429 0.78086880944303039 0.46852128566581819+0j Surface
    notes = surface waves along the boundary

Numbers are written with 17 significant digits so that they read back exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

__all__ = [
    "StabilityClass",
    "WaveKind",
    "GeneralizedEigenvalue",
    "StabilityReport",
    "format_reports",
    "parse_reports",
]


class StabilityClass(enum.Enum):
    ILL_POSED = "IllPosed"
    STRONGLY_BOUNDARY_STABLE = "StronglyBoundaryStable"
    BOUNDARY_STABLE = "BoundaryStable"
    STABLE = "Stable"
    UNSTABLE = "Unstable"
    # coupled pair with b1*b2 == -1: s = 0 is a generalized eigenvalue and no
    # estimate is available without extra time regularity of the data
    DEGENERATE = "Degenerate"


class WaveKind(enum.Enum):
    SURFACE = "Surface"
    GLANCING = "Glancing"
    OSCILLATORY = "Oscillatory"

    @classmethod
    def of(cls, kappa0: complex, tol: float = 1e-12) -> "WaveKind":
        if abs(kappa0) <= tol:
            return cls.GLANCING
        if kappa0.real > tol:
            return cls.SURFACE
        return cls.OSCILLATORY


@dataclass(frozen=True)
class GeneralizedEigenvalue:
    """Zero of a boundary symbol on the imaginary axis, ``s' = i*xi0'``.

    Stored on the unit circle ``xi0'**2 + omega0'**2 = 1``.
    """

    xi0_prime: float
    omega0_prime: float
    kappa0_prime: complex
    wave_kind: WaveKind

    def __post_init__(self):
        r = self.xi0_prime**2 + self.omega0_prime**2
        if abs(r - 1.0) > 1e-12:
            raise ValueError(f"xi0'^2 + omega0'^2 = {r!r}, expected 1")

    @property
    def s_prime(self) -> complex:
        return complex(0.0, self.xi0_prime)


@dataclass
class StabilityReport:
    classification: StabilityClass
    generalized_eigenvalues: list[GeneralizedEigenvalue] = field(default_factory=list)
    notes: str = ""
    holds: tuple[StabilityClass, ...] = ()
    eigenvalues: list[complex] = field(default_factory=list)
    label: str = ""
    coefficients: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if not self.holds:
            self.holds = (self.classification,)
        if (
            self.classification is StabilityClass.STRONGLY_BOUNDARY_STABLE
            and self.generalized_eigenvalues
        ):
            raise ValueError("a strongly boundary stable problem has no generalized eigenvalues")

    def wave_kinds(self) -> set[WaveKind]:
        return {g.wave_kind for g in self.generalized_eigenvalues}


def _num(x: float) -> str:
    return format(float(x), ".17g")


def _cnum(z: complex) -> str:
    z = complex(z)
    sign = "+" if z.imag >= 0 or math.isnan(z.imag) else "-"
    return f"{_num(z.real)}{sign}{_num(abs(z.imag))}j"


def format_reports(reports) -> str:
    blocks = []
    for r in reports:
        lines = ["[report]"]
        if r.label:
            lines.append(f"bc = {r.label}")
        for key, val in r.coefficients.items():
            lines.append(f"{key} = {_num(val)}")
        lines.append(f"classification = {r.classification.value}")
        lines.append("holds = " + ",".join(c.value for c in r.holds))
        for g in r.generalized_eigenvalues:
            lines.append(
                "generalized_eigenvalue = "
                f"{_num(g.xi0_prime)} {_num(g.omega0_prime)} {_cnum(g.kappa0_prime)} {g.wave_kind.value}"
            )
        for ev in r.eigenvalues:
            lines.append(f"eigenvalue = {_cnum(ev)}")
        if r.notes:
            lines.append("notes = " + " ".join(r.notes.split()))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def parse_reports(text: str) -> list[StabilityReport]:
    out = []
    current = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line == "[report]":
            current = {"coefficients": {}, "ges": [], "evs": []}
            out.append(current)
            continue
        if current is None:
            raise ValueError(f"content before first [report] header: {line!r}")
        key, _, val = (part.strip() for part in line.partition("="))
        if key == "bc":
            current["label"] = val
        elif key == "classification":
            current["classification"] = StabilityClass(val)
        elif key == "holds":
            current["holds"] = tuple(StabilityClass(v) for v in val.split(",") if v)
        elif key == "generalized_eigenvalue":
            xi, om, k0, kind = val.split()
            current["ges"].append(
                GeneralizedEigenvalue(float(xi), float(om), complex(k0), WaveKind(kind))
            )
        elif key == "eigenvalue":
            current["evs"].append(complex(val))
        elif key == "notes":
            current["notes"] = val
        else:
            current["coefficients"][key] = float(val)
    return [
        StabilityReport(
            classification=d["classification"],
            generalized_eigenvalues=d["ges"],
            notes=d.get("notes", ""),
            holds=d.get("holds", ()),
            eigenvalues=d["evs"],
            label=d.get("label", ""),
            coefficients=d["coefficients"],
        )
        for d in out
    ]
