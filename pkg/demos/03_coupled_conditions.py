"""
Two coupled conditions
======================

A pair of fields coupled through tangential derivatives at the boundary.
The determinant s^2 + omega^2 (1 + b1 b2) depends on the product b1 b2 only,
so the five regimes are sorted by that product.
"""

from wavebc import CoupledBC, DualPoint, classify_coupled, coupled_boundary_solution, coupled_determinant

for b1, b2 in [(0.0, 0.0), (0.5, 0.5), (2.0, -0.5), (0.5, -0.5), (2.0, -1.0)]:
    bc = CoupledBC(b1, b2)
    r = classify_coupled(bc)
    print(f"b1={b1:5.2f} b2={b2:5.2f} product={b1 * b2:6.2f}  {r.classification.value}")

bc = CoupledBC(0.5, 0.5)
p = DualPoint(0.2 + 1.0j, 1.0)
print("determinant:", coupled_determinant(bc, p))
print("boundary values for unit data:", coupled_boundary_solution(bc, 1.0, 0.0, p))
