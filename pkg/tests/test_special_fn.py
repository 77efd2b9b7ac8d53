import math
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liprime.errors import DomainError, NearSingularWarning, NearZeroError, PoleError
from liprime.special_fn import (
    QuadratureConfig,
    _e1_complex,
    exp_integral_e1,
    li,
    li_inverse,
    zeta,
    zeta_log_deriv,
)

from oracles import em_zeta, quad_li

# offset li values, mpmath li(x) - li(2)
LI_FIXTURES = {
    3: 1.1184248145496992,
    10: 5.1204357246698052,
    100: 29.080977803962137,
    10**4: 1245.092052119271,
    10**6: 78626.503995682064,
}


class TestLi:
    def test_li_at_lower_limit_is_zero(self):
        assert li(2.0) == 0.0

    @pytest.mark.parametrize("x,expected", sorted(LI_FIXTURES.items()))
    def test_li_against_fixture(self, x, expected):
        assert li(float(x)) == pytest.approx(expected, rel=1e-12, abs=1e-11)

    @pytest.mark.parametrize("x", [2.5, 7.0, 123.4, 5e4])
    def test_li_against_quadrature_oracle(self, x):
        assert li(x) == pytest.approx(quad_li(x), rel=1e-9, abs=1e-9)

    @pytest.mark.parametrize("bad", [1.9, 0.0, -5.0, math.inf, math.nan])
    def test_li_domain(self, bad):
        with pytest.raises(DomainError):
            li(bad)

    def test_quadrature_config_validation(self):
        with pytest.raises(DomainError):
            QuadratureConfig(abs_tol=0.0)
        with pytest.raises(DomainError):
            QuadratureConfig(max_subdivisions=0)


class TestLiInverse:
    def test_zero_maps_to_two(self):
        assert li_inverse(0.0) == 2.0

    def test_fixture_25(self):
        assert li_inverse(25.0, tol=1e-10) == pytest.approx(81.6101422612404, abs=1e-8)

    def test_fixture_1(self):
        assert li_inverse(1.0, tol=1e-10) == pytest.approx(2.8724679445087733, abs=1e-8)

    @given(st.floats(min_value=0.5, max_value=1e5))
    @settings(max_examples=40, deadline=None)
    def test_roundtrip(self, y):
        t = li_inverse(y, tol=1e-9)
        assert abs(li(t) - y) <= 1e-9

    def test_warm_start_agrees_with_cold(self):
        cold = li_inverse(1000.0, tol=1e-12)
        warm = li_inverse(1000.0, tol=1e-12, t0=cold * 1.01)
        assert warm == pytest.approx(cold, abs=1e-7)

    def test_monotone(self):
        ys = [1.0, 5.0, 25.0, 100.0, 1e4]
        ts = [li_inverse(y) for y in ys]
        assert ts == sorted(ts)

    def test_domain(self):
        with pytest.raises(DomainError):
            li_inverse(-1.0)
        with pytest.raises(DomainError):
            li_inverse(math.inf)

    def test_derivative_law(self):
        # d/dy li_inverse(y) = ln(li_inverse(y)); tolerance 1e-11 keeps the
        # Newton target above float granularity of li at t ~ 5e4
        h = 1e-4
        for y in (5.0, 100.0, 5000.0):
            t = li_inverse(y, tol=1e-11)
            fd = (li_inverse(y + h, tol=1e-11) - li_inverse(y - h, tol=1e-11)) / (2 * h)
            assert fd == pytest.approx(math.log(t), rel=1e-6)


class TestZeta:
    def test_zeta_2(self):
        assert zeta(2.0) == pytest.approx(math.pi**2 / 6, rel=1e-13)

    def test_zeta_3_fixture(self):
        assert complex(zeta(3.0)).real == pytest.approx(1.2020569031595943, rel=1e-13)

    def test_complex_fixture(self):
        got = zeta(complex(2, 3))
        assert got == pytest.approx(complex(0.79802198514627572, -0.1137443080529385), rel=1e-12)

    @pytest.mark.parametrize("s", [0.6, 1.5, 2.5, complex(0.8, 4.0), complex(3, -7)])
    def test_against_euler_maclaurin_oracle(self, s):
        assert zeta(s) == pytest.approx(em_zeta(s, n=60), rel=1e-9)

    def test_pole(self):
        with pytest.raises(PoleError):
            zeta(1.0)

    def test_left_half_plane_rejected(self):
        with pytest.raises(DomainError):
            zeta(-0.5)

    def test_near_singular_prefactor_warns(self):
        # 1 - 2^(1-s) vanishes at s = 1 - 2*pi*i/ln 2
        s = complex(1.0, -2 * math.pi / math.log(2))
        with pytest.warns(NearSingularWarning):
            zeta(s)

    def test_log_deriv_fixture(self):
        got = zeta_log_deriv(2.0)
        assert complex(got).real == pytest.approx(-0.56996099309453281, rel=1e-12)

    def test_log_deriv_matches_finite_difference(self):
        h = 1e-6
        fd = (complex(zeta(2.5 + h)) - complex(zeta(2.5 - h))) / (2 * h)
        assert zeta_log_deriv(2.5) == pytest.approx(fd / complex(zeta(2.5)), rel=1e-8)

    def test_near_zero_rejected(self):
        with pytest.raises(NearZeroError):
            zeta_log_deriv(complex(0.5, 14.134725141734694))


class TestE1:
    def test_fixture_ln2(self):
        assert exp_integral_e1(math.log(2)) == pytest.approx(0.37867104306108798, rel=1e-13)

    @pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 1.4999, 1.5001, 3.0, 10.0, 50.0])
    def test_against_scipy(self, x):
        from scipy.special import exp1

        assert exp_integral_e1(x) == pytest.approx(float(exp1(x)), rel=1e-12)

    def test_series_cf_agree_at_switch(self):
        from liprime.special_fn import _e1_continued_fraction, _e1_series

        for z in (1.2, 1.5, 1.8):
            assert _e1_series(complex(z)) == pytest.approx(
                _e1_continued_fraction(complex(z)), rel=1e-12
            )

    def test_complex_argument(self):
        import mpmath as mp

        z = complex(2.0, 5.0)
        ref = complex(mp.e1(mp.mpc(2, 5)))
        assert _e1_complex(z) == pytest.approx(ref, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            exp_integral_e1(0.0)
        with pytest.raises(DomainError):
            exp_integral_e1(-1.0)
