"""
Classifying scalar boundary conditions
======================================

Four families of scalar conditions for the wave equation on a half space.
Each is classified from its boundary symbol: zeros with Re s > 0 make the
problem ill posed, zeros on the imaginary axis (generalized eigenvalues)
decide how much regularity is lost at the boundary.
"""

import numpy as np

from wavebc import BCType, ScalarBC, classify_scalar, eigenvalue_search, generalized_eigenvalues, perturbation_slope
from wavebc.report import format_reports

conditions = [
    ScalarBC(BCType.TYPE1, a=1.0, b=0.5),
    ScalarBC(BCType.TYPE2, b=0.6),
    ScalarBC(BCType.TYPE3),
    ScalarBC(BCType.TYPE4, b=0.5),
    ScalarBC(BCType.TYPE1, a=-0.5, flagged=True),  # wrong sign of a
]
print(format_reports([classify_scalar(bc) for bc in conditions]))

# the wrong sign produces a genuine eigenvalue with Re s > 0
for p in eigenvalue_search(conditions[-1], grid_density=24)[:3]:
    print("eigenvalue:", p.s, "omega:", p.omega)

# how fast the symbol leaves zero as Re s grows from a generalized eigenvalue
eta = np.geomspace(1e-7, 1e-4, 12)
for bc in conditions[1:4]:
    g = generalized_eigenvalues(bc)[0]
    fit = perturbation_slope(bc, g, eta)
    print(f"{bc.label}: |symbol| ~ {fit.constant:.4f} * eta^{fit.order:.3f}")
