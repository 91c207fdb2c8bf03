"""
Leapfrog on the unit strip
==========================

Second-order errors for a traveling wave with three boundary coefficients.
Coarse grids here; the acceptance suite runs the full table.
"""

from wavebc import BoundaryCoefficient
from wavebc.experiments import convergence_order, traveling_wave_suite

h_list = (1 / 25, 1 / 50, 1 / 100)
for b in ("0", "0.5", "i0.5"):
    rows = traveling_wave_suite(BoundaryCoefficient.parse(b), h_list)
    for r in rows:
        print(f"b={b:5s} h={r.h:.4f}  t=1: {r.err_t1:.3e}  t=10: {r.err_t10:.3e}")
    print("  order at t=1:", round(convergence_order(h_list, [r.err_t1 for r in rows]), 3))
