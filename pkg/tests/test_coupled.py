import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from wavebc.branch import DualPoint, kappa, kappa_limit
from wavebc.coupled import (
    CoupledBC,
    SingularBoundarySystem,
    classify_coupled,
    coupled_boundary_matrix,
    coupled_boundary_solution,
    coupled_determinant,
)
from wavebc.report import StabilityClass, WaveKind

coef = st.floats(-4, 4, allow_nan=False)


class TestDeterminant:
    def test_zero_at_origin_of_s_when_product_is_minus_one(self):
        for w in (0.3, 1.0, 7.0):
            assert coupled_determinant(CoupledBC(1.0, -1.0), DualPoint(0.0, w)) == 0

    def test_decoupled(self):
        p = DualPoint(1 + 2j, 3.0)
        assert coupled_determinant(CoupledBC(0.0, 5.0), p) == pytest.approx((1 + 2j) ** 2 + 9)

    @given(coef, coef, st.floats(0, 5), st.floats(-5, 5), st.floats(-5, 5))
    def test_equals_matrix_determinant(self, b1, b2, eta, xi, w):
        assume(abs(complex(eta, xi)) + abs(w) > 1e-3)
        p = DualPoint(complex(eta, xi), w)
        m = coupled_boundary_matrix(CoupledBC(b1, b2), p)
        scale = abs(p.s) ** 2 + w * w * (1 + abs(b1 * b2))
        assert abs(np.linalg.det(m) - coupled_determinant(CoupledBC(b1, b2), p)) <= 1e-12 * scale

    def test_left_half_plane_rejected(self):
        with pytest.raises(ValueError):
            coupled_determinant(CoupledBC(1, 1), DualPoint(-1.0, 0.0))


class TestSolution:
    @given(coef, coef, st.floats(0.01, 5), st.floats(-5, 5), st.floats(-5, 5))
    def test_solves_boundary_system(self, b1, b2, eta, xi, w):
        cb = CoupledBC(b1, b2)
        p = DualPoint(complex(eta, xi), w)
        assume(abs(coupled_determinant(cb, p)) > 1e-3 * (abs(p.s) ** 2 + w * w))
        g = np.array([1.0 - 0.5j, 0.25 + 2j])
        u = np.array(coupled_boundary_solution(cb, g[0], g[1], p))
        m = coupled_boundary_matrix(cb, p)
        assert np.linalg.norm(m @ u - g) <= 1e-10 * max(1.0, np.linalg.norm(m) * np.linalg.norm(u))
        assert np.allclose(u, np.linalg.solve(m, g), rtol=1e-8, atol=1e-12)

    def test_zero_data(self):
        assert coupled_boundary_solution(CoupledBC(0.3, 2.0), 0, 0, DualPoint(1 + 1j, 1.0)) == (0, 0)

    def test_real_axis_neumann(self):
        assert coupled_boundary_solution(CoupledBC(0, 0), 1.0, 0.0, DualPoint(1.0, 0.0)) == (-1, 0)

    def test_neumann_limit(self):
        # b1 = b2 = 0: u_x = g with u = u0 exp(-kappa x) gives u0 = -g / kappa
        p = DualPoint(1 + 1j, 2.0)
        k = kappa(p).value
        u1, u2 = coupled_boundary_solution(CoupledBC(0, 0), 1.0, 2.0, p)
        assert u1 == pytest.approx(-1 / k) and u2 == pytest.approx(-2 / k)

    def test_singular_raises(self):
        with pytest.raises(SingularBoundarySystem):
            coupled_boundary_solution(CoupledBC(2.0, -1.0), 1.0, 0.0, DualPoint(1.0, 1.0))
        with pytest.raises(SingularBoundarySystem):
            coupled_boundary_solution(CoupledBC(1.0, -1.0), 1.0, 0.0, DualPoint(0.0, 1.0))


class TestClassify:
    def test_ill_posed(self):
        r = classify_coupled(CoupledBC(2.0, -1.0))
        assert r.classification is StabilityClass.ILL_POSED
        (s,) = r.eigenvalues
        # s^2 = omega^2 (-1 - p) with p = -2, normalized: s' = 1/sqrt(2)
        assert s == pytest.approx(1 / math.sqrt(2))
        w = math.sqrt(1 - s.real**2)
        assert abs(coupled_determinant(CoupledBC(2.0, -1.0), DualPoint(s, w))) < 1e-14

    def test_degenerate(self):
        r = classify_coupled(CoupledBC(1.0, -1.0))
        assert r.classification is StabilityClass.DEGENERATE
        assert r.generalized_eigenvalues[0].xi0_prime == 0.0

    def test_surface(self):
        r = classify_coupled(CoupledBC(0.5, -1.0))
        assert r.classification is StabilityClass.STABLE
        assert r.wave_kinds() == {WaveKind.SURFACE}

    def test_glancing(self):
        r = classify_coupled(CoupledBC(0.0, 3.0))
        assert r.classification is StabilityClass.STABLE
        assert r.wave_kinds() == {WaveKind.GLANCING}

    def test_oscillatory(self):
        r = classify_coupled(CoupledBC(1.0, 1.0))
        assert r.classification is StabilityClass.UNSTABLE
        assert r.wave_kinds() == {WaveKind.OSCILLATORY}

    @given(coef, coef)
    def test_generalized_eigenvalues_are_zeros(self, b1, b2):
        cb = CoupledBC(b1, b2)
        for g in classify_coupled(cb).generalized_eigenvalues:
            if g.xi0_prime == 0:
                continue
            p = DualPoint(g.s_prime, g.omega0_prime)
            assert abs(coupled_determinant(cb, p)) < 1e-12
            assert abs(kappa_limit(p.s, p.omega) - g.kappa0_prime) < 1e-7

    @given(coef, coef)
    def test_depends_only_on_product(self, b1, b2):
        a = classify_coupled(CoupledBC(b1, b2))
        b = classify_coupled(CoupledBC(b1 * b2, 1.0))
        assert a.classification is b.classification
        assert a.generalized_eigenvalues == b.generalized_eigenvalues
        assert a.eigenvalues == b.eigenvalues
