"""
The square-root branch and its lower bounds
===========================================

kappa = sqrt(s^2 + omega^2) is taken with a nonnegative real part.  On the
imaginary s axis the value is the one-sided limit from Re s > 0, which puts
the cut on the positive imaginary kappa axis for xi > 0.
"""

import numpy as np

from wavebc import DualPoint, bound_report, kappa
from wavebc.branch import kappa_limit

# a point with Re s > 0
p = DualPoint(0.3 + 2.0j, 1.0)
k = kappa(p)
print("kappa at", p.s, "->", k.value)

# approaching the glancing point s = i, omega = 1 from the right
for eta in (1e-1, 1e-3, 1e-6):
    print(f"eta={eta:g}  |kappa| = {abs(kappa(DualPoint(eta + 1j, 1.0)).value):.3e}")

# on the axis beyond the glancing point the limit is purely imaginary
print("limit at s=2i, omega=1:", kappa_limit(2j, 1.0))
print("limit at s=-2i, omega=1:", kappa_limit(-2j, 1.0))

# every lower and upper bound at one point, with its margin
report = bound_report(p, delta=0.5)
for q in report.inequalities:
    print(f"{q.name:20s} {q.lhs:9.4f} >= {q.rhs:9.4f}  {'ok' if q.holds else 'FAILS'}")

# a quick random sweep
rng = np.random.default_rng(0)
worst = min(
    min(q.lhs - q.rhs for q in bound_report(DualPoint(complex(rng.exponential(), rng.normal(0, 4)), rng.normal(0, 4))).inequalities)
    for _ in range(2000)
)
print("smallest margin over 2000 random points:", worst)
