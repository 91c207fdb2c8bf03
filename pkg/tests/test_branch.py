import cmath
import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from wavebc.branch import (
    BoundConstants,
    DualPoint,
    bound_margins,
    bound_report,
    denormalize,
    kappa,
    kappa_limit,
    kappa_values,
    normalize,
    sqrt_branch,
)

finite = st.floats(-50, 50, allow_nan=False, allow_infinity=False)
positive = st.floats(1e-6, 50, allow_nan=False, allow_infinity=False)


def polar_kappa(s: complex, omega: float) -> complex:
    """Oracle: sqrt(rho) exp(i theta/2) from (a, b) = (omega^2 + eta^2 - xi^2, 2 xi eta)."""
    eta, xi = s.real, s.imag
    a = omega**2 + eta**2 - xi**2
    b = 2 * xi * eta
    rho = math.hypot(a, b)
    theta = math.atan2(b, a)
    if theta == -math.pi:
        theta = math.pi
    return math.sqrt(rho) * cmath.exp(0.5j * theta)


class TestKappa:
    def test_real_positive_s(self):
        assert kappa(DualPoint(1.0, 0.0)).value == 1.0

    def test_glancing_point_vanishes(self):
        assert abs(kappa(DualPoint(3j, 3.0)).value) == 0.0
        assert abs(kappa(DualPoint(-2j, 2.0)).value) == 0.0

    def test_polar_oracle(self):
        k = kappa(DualPoint(1 + 2j, 3.0)).value
        assert abs(k - polar_kappa(1 + 2j, 3.0)) < 1e-14

    def test_cut_maps_to_positive_imaginary_axis(self):
        k = kappa(DualPoint(2j, 1.0))
        assert k.branch_arg == math.pi
        assert k.value == pytest.approx(1j * math.sqrt(3.0), abs=1e-15)
        k = kappa(DualPoint(-2j, 1.0))
        assert k.value.imag > 0 and k.branch_arg == math.pi

    def test_negative_zero_imaginary_part_is_ignored(self):
        assert sqrt_branch(complex(-4.0, -0.0)) == 2j
        assert np.all(sqrt_branch(np.array([-4 - 0j, -9 + 0j])) == [2j, 3j])

    def test_origin_rejected(self):
        with pytest.raises(ValueError):
            DualPoint(0.0, 0.0)

    def test_limit_from_right_half_plane(self):
        # on the cut the one-sided limit follows sign(xi)
        assert kappa_limit(2j, 1.0) == pytest.approx(1j * math.sqrt(3))
        assert kappa_limit(-2j, 1.0) == pytest.approx(-1j * math.sqrt(3))
        for xi in (2.0, -2.0):
            near = kappa_values(1e-9 + 1j * xi, 1.0)
            assert abs(kappa_limit(1j * xi, 1.0) - near) < 1e-8

    @given(finite, finite, finite)
    def test_squares_back(self, eta, xi, omega):
        assume(abs(complex(eta, xi)) + abs(omega) > 1e-3)
        k = kappa(DualPoint(complex(eta, xi), omega))
        z = complex(eta, xi) ** 2 + omega**2
        assert abs(k.value**2 - z) <= 1e-12 * max(abs(z), abs(k.value) ** 2)
        assert k.value.real >= 0
        assert -math.pi < k.branch_arg <= math.pi

    @given(positive, finite, finite)
    def test_positive_real_part_for_positive_eta(self, eta, xi, omega):
        assert kappa(DualPoint(complex(eta, xi), omega)).value.real > 0

    @given(finite, finite, finite)
    def test_even_in_omega_and_conjugate_symmetric(self, eta, xi, omega):
        s = complex(eta, xi)
        assume(abs(s) + abs(omega) > 1e-3)
        z = s * s + omega * omega
        assume(not (z.real < 0 and abs(z.imag) < 1e-10 * max(1.0, abs(z))))
        k = kappa(DualPoint(s, omega)).value
        assert kappa(DualPoint(s, -omega)).value == k
        assert abs(kappa(DualPoint(s.conjugate(), omega)).value - k.conjugate()) <= 1e-14 * max(1.0, abs(k))

    def test_vectorized_matches_scalar(self):
        rng = np.random.default_rng(3)
        s = rng.normal(size=50) + 1j * rng.normal(size=50)
        w = rng.normal(size=50)
        vec = kappa_values(s, w)
        for i in range(50):
            assert abs(vec[i] - kappa(DualPoint(s[i], w[i])).value) <= 1e-15 * abs(vec[i])


class TestNormalize:
    def test_omega_zero(self):
        q, scale = normalize(DualPoint(3 + 4j, 0.0))
        assert scale == 5.0
        assert q.s_prime == (3 + 4j) / 5

    def test_symmetric_point(self):
        _, scale = normalize(DualPoint(1j, 1.0))
        assert scale == pytest.approx(math.sqrt(2), rel=1e-15)

    @given(finite, finite, finite)
    def test_round_trip(self, eta, xi, omega):
        assume(abs(complex(eta, xi)) + abs(omega) > 1e-6)
        p = DualPoint(complex(eta, xi), omega)
        q, scale = normalize(p)
        assert abs(abs(q.s_prime) ** 2 + q.omega_prime**2 - 1) < 1e-12
        back = denormalize(q, scale)
        assert abs(back.s - p.s) <= 1e-12 * scale
        assert abs(back.omega - p.omega) <= 1e-12 * scale

    def test_kappa_scales_linearly(self):
        p = DualPoint(0.3 + 2j, -1.5)
        q, scale = normalize(p)
        assert abs(q.kappa_prime * scale - kappa(p).value) < 1e-13


class TestBounds:
    def test_constants_at_half(self):
        c = BoundConstants.from_delta(0.5)
        d1 = 0.5**0.5 / 2**0.25
        d2 = 0.5**0.25
        assert c.delta1 == pytest.approx(d1, rel=1e-15)
        assert c.delta2 == pytest.approx(d2, rel=1e-15)
        assert c.delta3 == pytest.approx(d1)
        assert c.delta4 == pytest.approx(d1 / 2**0.75)
        assert c.delta6 == pytest.approx(min(d1 * d1 / 2**0.75, d2**2 / 2**1.25, 2**-0.75))

    @pytest.mark.parametrize("delta", [0.0, 1.0, -0.1, 1.5])
    def test_delta_range(self, delta):
        with pytest.raises(ValueError):
            BoundConstants.from_delta(delta)

    def test_unit_real_point(self):
        r = bound_report(DualPoint(1.0, 0.0), 0.5)
        assert r.abs_kappa == 1.0
        assert r["abs_eta"].holds
        assert r.all_hold

    def test_near_glancing(self):
        r = bound_report(DualPoint(0.01 + 10j, 10.0), 0.5)
        q = r["product"]
        assert q.holds
        assert q.lhs == pytest.approx(r.abs_kappa * r.re_kappa)

    def test_rejects_left_half_plane(self):
        with pytest.raises(ValueError):
            bound_report(DualPoint(-1.0, 1.0))

    def test_split_bound_constant(self):
        # the weakest point of the second branch: |kappa|^2 >= |b| = 2|xi|eta with
        # xi at the edge of the region gives ratio (2(1-delta))^(1/4), above delta2
        s, w = 1.7062944968429274 + 2.7929806194373623j, 2.390091056724972
        lhs, rhs = bound_margins(s, w, 0.5)["abs_split"]
        R = math.sqrt(w**2 + abs(s) ** 2)
        ratio = float(lhs) / math.sqrt(R * s.real)
        assert ratio == pytest.approx(1.1762, abs=1e-4)
        assert ratio < 2**0.5 * 0.5**0.25  # the larger constant sqrt(2)(1-delta)^(1/4) fails here
        assert lhs >= rhs

    @pytest.mark.parametrize("delta", [0.1, 0.5, 0.9])
    def test_split_bound_on_dense_scan(self, delta):
        c = BoundConstants.from_delta(delta)
        eta = np.geomspace(1e-3, 30, 600)[:, None]
        xi = np.linspace(0, 30, 600)[None, :]
        s = eta + 1j * xi
        R = np.sqrt(1 + np.abs(s) ** 2)
        a = 1 + s.real**2 - s.imag**2
        inside = np.abs(a) < delta * R**2
        ratio = np.abs(np.sqrt(s * s + 1))[inside] / np.sqrt(R * s.real)[inside]
        assert ratio.min() >= c.delta2

    @settings(max_examples=300)
    @given(positive, finite, finite, st.floats(0.05, 0.95))
    def test_every_inequality_holds(self, eta, xi, omega, delta):
        r = bound_report(DualPoint(complex(eta, xi), omega), delta)
        assert r.all_hold, [q for q in r.inequalities if not q.holds]

    def test_vectorized_sweep(self):
        rng = np.random.default_rng(11)
        n = 20000
        s = rng.exponential(1.0, n) * 10.0 ** rng.uniform(-4, 1, n) + 1j * rng.normal(0, 5, n)
        w = rng.normal(0, 5, n)
        for name, (lhs, rhs) in bound_margins(s, w, 0.5).items():
            assert np.all(lhs >= rhs * (1 - 1e-12)), name
