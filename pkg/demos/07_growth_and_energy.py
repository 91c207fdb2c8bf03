"""
Energy and growth
=================

With a zero tangential coefficient the discrete energy is conserved to
round-off.  A real coefficient b = 0.5 feeds energy in through the boundary
and a Gaussian pulse grows without bound, faster on finer grids.
"""

from wavebc import BoundaryCoefficient, Grid2D, discrete_energy, initialize, step
from wavebc.experiments import growth_study
from wavebc.solutions import GaussianPulse

g = Grid2D.from_h(1 / 50)
bc = BoundaryCoefficient.zero()
data = GaussianPulse(width=0.08).problem_data(g)
f = initialize(g, data, bc)
step(f, g, bc, data)
e1 = discrete_energy(f, g)
for _ in range(1000):
    step(f, g, bc, data)
print("relative energy drift over 1000 steps:", abs(discrete_energy(f, g) - e1) / e1)

series = growth_study(0.5, h_list=(1 / 40, 1 / 80), t_end=10.0, sample_dt=0.5)
for h, s in series.items():
    print(f"h={h:.4f}  t=2: {s.at(2.0):.3f}  t=10: {s.at(10.0):.3f}")
