"""
Reflection roots
================

Roots of exp(2 lam) + lam^2 = 0 (loss) and exp(2 lam) + lam^-2 = 0 (gain)
near lam = i pi n.  Loss roots drift right like log(pi n); gain roots stay
in the left half plane.
"""

import math

from wavebc import reflection_roots

for case in ("loss", "gain"):
    print(case)
    for r in reflection_roots(case, 40)[::8]:
        print(f"  n={r.n:3d} lam={r.lam:.6f}  log(pi n)={math.log(math.pi * r.n):.4f}  residual={r.residual:.1e}")
