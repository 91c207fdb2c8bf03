"""
Second-order systems and the resolvent
======================================

For A1 u_xx + sum_j B_j u_yjyj = u_tt the Laplace-Fourier transform gives a
first-order system in x.  Its eigenvalues split evenly between the half
planes when Re s > 0, and Re s times the resolvent norm stays bounded as
Re s shrinks.
"""

import numpy as np

from wavebc import SystemSpec, block_reduce, build_first_order_symbol, eigen_split, h_spectrum, resolvent_product
from wavebc.systems import exact_h_eigenvalues

sys = SystemSpec(np.array([[2.0, 0.5], [0.5, 1.0]]), [np.array([[1.0, 0.2], [0.2, 3.0]])])
sp = eigen_split(build_first_order_symbol(sys, 0.3 + 1.1j, [0.7]))
print("split:", sp.n_minus, sp.n_plus)
print("eigenvalues:", np.round(sp.eigenvalues, 4))

omega1 = np.linspace(-20, 20, 401)
for eta in (1.0, 0.1, 0.01, 0.001):
    print(f"Re s={eta:<6g} product = {resolvent_product(sys, eta + 1.1j, [0.7], omega1):.4f}")

# near the imaginary axis the reduced eigenvalues are accurate to second order
hs = h_spectrum(sys, [0.8], 0.6)
print("kappa^2 on the axis:", hs.kappa_sq)
for eta in (1e-2, 1e-3, 1e-4):
    approx = block_reduce(sys, [0.8], 0.6, eta)
    exact = exact_h_eigenvalues(sys, [0.8], 0.6j + eta)
    print(f"eta={eta:g} error {np.max(np.abs(approx - exact[np.argsort(-exact.real)])):.2e}")
