"""Boundary-condition analysis and leapfrog experiments for second-order wave problems.

Mode analysis lives in :mod:`wavebc.branch`, :mod:`wavebc.scalar`,
:mod:`wavebc.coupled`, :mod:`wavebc.systems` and :mod:`wavebc.reflection`;
the finite-difference solver in :mod:`wavebc.fd`; manufactured solutions and
studies in :mod:`wavebc.solutions` and :mod:`wavebc.experiments`.
"""

from .branch import DualPoint, Kappa, NormalizedDualPoint, bound_report, kappa, normalize
from .coupled import CoupledBC, classify_coupled, coupled_boundary_solution, coupled_determinant
from .fd import BoundaryCoefficient, Diverged, FieldPair, Grid2D, ProblemData, discrete_energy, initialize, run, step
from .reflection import reflection_roots
from .report import GeneralizedEigenvalue, StabilityClass, StabilityReport, WaveKind
from .scalar import BCType, ScalarBC, boundary_symbol, classify_scalar, eigenvalue_search, generalized_eigenvalues, perturbation_slope
from .systems import SystemSpec, block_reduce, build_first_order_symbol, eigen_split, h_spectrum, resolvent_product, resolvent_solution

__version__ = "0.1.0"

__all__ = [
    "BCType",
    "BoundaryCoefficient",
    "CoupledBC",
    "Diverged",
    "DualPoint",
    "FieldPair",
    "GeneralizedEigenvalue",
    "Grid2D",
    "Kappa",
    "NormalizedDualPoint",
    "ProblemData",
    "ScalarBC",
    "StabilityClass",
    "StabilityReport",
    "SystemSpec",
    "WaveKind",
    "block_reduce",
    "boundary_symbol",
    "bound_report",
    "build_first_order_symbol",
    "classify_coupled",
    "classify_scalar",
    "coupled_boundary_solution",
    "coupled_determinant",
    "discrete_energy",
    "eigen_split",
    "eigenvalue_search",
    "generalized_eigenvalues",
    "h_spectrum",
    "initialize",
    "kappa",
    "normalize",
    "perturbation_slope",
    "reflection_roots",
    "resolvent_product",
    "resolvent_solution",
    "run",
    "step",
]
