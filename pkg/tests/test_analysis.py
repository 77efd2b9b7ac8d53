import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liprime.analysis import (
    approx_error_table,
    comparison_series,
    error_series_partial,
    exponent_fit,
    fit_error_exponent,
    integral_identity_check,
    integral_vs_sum,
)
from liprime.errors import DegenerateFitError, DomainError
from liprime.special_fn import li


class TestErrorTable:
    def test_row_25(self, table_1e6):
        rows = approx_error_table(25, table_1e6)
        r = rows[24]
        assert r.p_n == 97
        assert r.li_inv == pytest.approx(81.6101422612404, abs=1e-7)
        assert r.abs_err == pytest.approx(abs(81.6101422612404 - 97), abs=1e-7)
        assert r.scaled_err == pytest.approx(r.abs_err / 25**0.52, rel=1e-12)

    def test_row_1(self, table_1e6):
        r = approx_error_table(1, table_1e6)[0]
        assert r.p_n == 2
        assert r.li_inv > 2.0
        assert r.abs_err > 0.0

    def test_rows_in_order_and_consistent(self, table_1e6):
        rows = approx_error_table(200, table_1e6)
        assert [r.n for r in rows] == list(range(1, 201))
        for r in rows[::23]:
            assert table_1e6.pi(r.p_n) == r.n  # cross-module ground truth
            assert li(r.li_inv) == pytest.approx(float(r.n), abs=1e-7)

    def test_capacity(self, table_1e6):
        with pytest.raises(DomainError):
            approx_error_table(10**6, table_1e6)
        with pytest.raises(DomainError):
            approx_error_table(0, table_1e6)


class TestExponentFit:
    def test_synthetic_sqrt(self):
        ns = np.arange(10, 500)
        assert fit_error_exponent(ns, ns**0.5) == pytest.approx(0.5, abs=1e-12)

    def test_synthetic_constant(self):
        ns = np.arange(10, 500)
        assert fit_error_exponent(ns, np.full(ns.size, 3.7)) == pytest.approx(0.0, abs=1e-12)

    def test_degenerate(self):
        with pytest.raises(DegenerateFitError):
            fit_error_exponent([1, 2, 3], [1.0, 2.0, 3.0])
        with pytest.raises(DegenerateFitError):
            fit_error_exponent(np.arange(1, 20), np.zeros(19))  # all rows skipped

    @given(c=st.floats(min_value=1e-6, max_value=1e6))
    @settings(max_examples=30, deadline=None)
    def test_scale_invariance(self, c):
        ns = np.arange(10, 200)
        errs = ns**0.37 * (1.0 + 0.1 * np.sin(ns))
        a = fit_error_exponent(ns, errs)
        b = fit_error_exponent(ns, c * errs)
        assert a == pytest.approx(b, abs=1e-12)

    def test_desk_scale_envelope(self, table_1e6):
        alpha = exponent_fit(100, 2000, table_1e6)
        assert 0.3 < alpha < 0.7

    def test_range_validation(self, table_1e6):
        with pytest.raises(DomainError):
            exponent_fit(5, 100, table_1e6)
        with pytest.raises(DomainError):
            exponent_fit(100, 100, table_1e6)


class TestComparisonSeries:
    def test_majorant_dominates(self, table_1e6):
        for n_max in (100, 1000):
            rep = comparison_series(2.0, n_max, table_1e6)
            assert rep.residual <= rep.tail_estimate

    def test_majorant_dominates_complex(self, table_1e6):
        rep = comparison_series(complex(2, 3), 500, table_1e6)
        assert rep.residual <= rep.tail_estimate

    def test_difference_shrinks_with_n_max(self, table_1e6):
        small = comparison_series(2.0, 100, table_1e6).residual
        large = comparison_series(2.0, 10**4, table_1e6).residual
        assert large <= small

    def test_domain(self, table_1e6):
        with pytest.raises(DomainError):
            comparison_series(1.0, 100, table_1e6)


class TestErrorSeries:
    def test_sigma_one_converged(self, table_1e6):
        a, b = error_series_partial(1.0, 0.05, 10**4, table_1e6)
        assert a.converged and b.converged
        assert math.isfinite(a.tail_estimate)

    def test_sigma_06_exponent_test_passes(self, table_1e6):
        a, b = error_series_partial(0.6, 0.05, 2000, table_1e6)
        assert a.converged  # comparison exponent 1.05 > 1

    def test_sigma_04_fails_exponent_test(self, table_1e6):
        a, b = error_series_partial(0.4, 0.05, 2000, table_1e6)
        assert not a.converged and a.tail_estimate == math.inf

    def test_monotone_in_sigma(self, table_1e6):
        v1 = error_series_partial(0.8, 0.05, 2000, table_1e6)[0].value
        v2 = error_series_partial(1.2, 0.05, 2000, table_1e6)[0].value
        assert v2 < v1

    def test_domain(self, table_1e6):
        with pytest.raises(DomainError):
            error_series_partial(0.0, 0.05, 100, table_1e6)
        with pytest.raises(DomainError):
            error_series_partial(1.0, 0.7, 100, table_1e6)


class TestIntegralVsSum:
    def test_bound_dominates(self, table_1e6):
        rep = integral_vs_sum(2.0, 400)
        assert rep.residual <= rep.tail_estimate

    def test_faster_decay_at_larger_s(self):
        r2 = integral_vs_sum(2.0, 400).residual
        r3 = integral_vs_sum(3.0, 400).residual
        assert r3 < r2

    def test_complex_s(self):
        rep = integral_vs_sum(complex(2, 1), 300)
        assert rep.residual <= rep.tail_estimate

    def test_single_interval_mean_value_bound(self):
        # |f(n)^-s - int_n^(n+1) f(t)^-s dt| <= max |d/dt f^-s| on the interval
        from liprime.special_fn import li_inverse

        s, n = 2.0, 50
        f_n = li_inverse(float(n), tol=1e-12)
        f_n1 = li_inverse(float(n + 1), tol=1e-12)
        lhs_term = f_n**-s
        # integral via the same u-substitution used in the module
        from liprime.special_fn import DEFAULT_QUADRATURE, _adaptive_gauss

        integral = _adaptive_gauss(
            lambda v: np.exp((1.0 - s) * v) / v, math.log(f_n), math.log(f_n1),
            DEFAULT_QUADRATURE,
        )
        bound = s * math.log(f_n1) * f_n ** -(s + 1.0)
        assert abs(lhs_term - integral) <= bound

    def test_domain(self):
        with pytest.raises(DomainError):
            integral_vs_sum(1.0, 100)


class TestIntegralIdentity:
    @pytest.mark.parametrize("s", [1.5, 2.0, 3.0])
    def test_value_residual(self, s):
        value_rep, _ = integral_identity_check(s)
        assert value_rep.residual < 1e-8

    @pytest.mark.parametrize("s", [1.5, 2.0, 3.0])
    def test_derivative_residual(self, s):
        _, deriv_rep = integral_identity_check(s)
        assert deriv_rep.residual < 1e-6

    def test_value_fixture_s2(self):
        value_rep, _ = integral_identity_check(2.0)
        assert complex(value_rep.lhs).real == pytest.approx(0.37867104306108798, abs=1e-8)

    def test_monotone_decay(self):
        vals = [complex(integral_identity_check(s)[0].lhs).real for s in (5.0, 10.0, 20.0)]
        assert vals[0] > vals[1] > vals[2] > 0.0

    def test_domain(self):
        with pytest.raises(DomainError):
            integral_identity_check(1.0)
        with pytest.raises(DomainError):
            integral_identity_check(2.0, h_step=-1.0)
