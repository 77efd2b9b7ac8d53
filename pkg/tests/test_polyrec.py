import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liprime.errors import (
    DivergenceWarning,
    DomainError,
    StepTooLargeError,
    TailTooLargeError,
)
from liprime.polyrec import (
    IntPolynomial,
    TaylorAnchor,
    _taylor_chain,
    eval_poly,
    gen_function_l,
    nth_prime_approx,
    pde_residual,
    pn_polynomials,
    taylor_step,
)
from liprime.special_fn import li, li_inverse


class TestRecurrence:
    def test_first_polynomials_exact(self):
        p = pn_polynomials(4)
        assert p[0].coeffs == (0, 1)
        assert p[1].coeffs == (0, 1)
        assert p[2].coeffs == (0, 1, -1)
        assert p[3].coeffs == (0, 1, -4, 2)
        assert p[4].coeffs == (0, 1, -11, 18, -6)

    def test_recurrence_identity_exact_to_30(self):
        polys = pn_polynomials(30)
        for n in range(30):
            pn, dpn = polys[n].coeffs, polys[n].derivative().coeffs
            width = max(len(pn), len(dpn))
            inner = [
                -n * (pn[i] if i < len(pn) else 0) + (dpn[i] if i < len(dpn) else 0)
                for i in range(width)
            ]
            expect = tuple([0] + inner)
            got = polys[n + 1].coeffs
            assert got == expect[: len(got)]
            assert all(c == 0 for c in expect[len(got) :])

    def test_x_divides_every_pn(self):
        for p in pn_polynomials(30):
            assert p.coeffs[0] == 0

    def test_leading_coefficient_closed_form(self):
        polys = pn_polynomials(30)
        for n in range(1, 31):
            assert polys[n].leading_coefficient == (-1) ** (n - 1) * math.factorial(n - 1)

    def test_degrees(self):
        polys = pn_polynomials(20)
        for n in range(1, 21):
            assert polys[n].degree == n

    def test_negative_n_rejected(self):
        with pytest.raises(DomainError):
            pn_polynomials(-1)


class TestEvalPoly:
    def test_small_values(self):
        p = pn_polynomials(3)
        assert eval_poly(p[2], 1.0) == 0.0
        assert eval_poly(p[2], 2.0) == -2.0
        assert eval_poly(p[3], 2.0) == 2.0

    @given(st.integers(min_value=0, max_value=12), st.floats(min_value=-3, max_value=3))
    @settings(max_examples=50, deadline=None)
    def test_matches_direct_sum(self, n, x):
        p = pn_polynomials(n)[n]
        direct = sum(c * x**i for i, c in enumerate(p.coeffs))
        assert eval_poly(p, x) == pytest.approx(direct, rel=1e-12, abs=1e-9)

    def test_trailing_zero_rejected(self):
        with pytest.raises(ValueError):
            IntPolynomial((1, 0))


class TestSeries:
    def test_leading_term_is_p0(self):
        value, last = gen_function_l(2.0, 0.0, 5)
        assert value == 2.0  # only the n = 0 term survives at y = 0
        assert last == 0.0

    def test_divergence_warning(self):
        with pytest.warns(DivergenceWarning):
            gen_function_l(1.0, 50.0, 25)

    def test_n_terms_validation(self):
        with pytest.raises(DomainError):
            gen_function_l(1.0, 0.1, 0)


class TestPde:
    POINTS = [(x, y) for x in (1.0, 1.5, 3.0) for y in (0.0, 0.01, 0.02)]

    @pytest.mark.parametrize("x,y", POINTS)
    def test_analytic_residual_small(self, x, y):
        assert pde_residual(x, y, n_terms=40, h_step=1e-5) < 1e-9

    @pytest.mark.parametrize("x,y", [(1.5, 0.01), (3.0, 0.02)])
    def test_finite_difference_cross_check(self, x, y):
        fd = pde_residual(x, y, n_terms=40, h_step=1e-5, finite_difference=True)
        assert fd < 1e-7

    def test_tail_guard(self):
        with pytest.raises(TailTooLargeError):
            pde_residual(1.0, 5.0, n_terms=10, h_step=1e-5)

    def test_fd_needs_positive_step(self):
        with pytest.raises(DomainError):
            pde_residual(1.0, 0.01, n_terms=40, h_step=0.0, finite_difference=True)


class TestTaylor:
    def test_anchor_consistency_check(self):
        with pytest.raises(DomainError):
            TaylorAnchor(x0=5.0, f0=10.0, g0=1.0)  # g0 != ln 10
        with pytest.raises(DomainError):
            TaylorAnchor(x0=5.0, f0=1.5, g0=math.log(1.5))

    def test_anchor_at_validates(self):
        a = TaylorAnchor.at(10.0)
        a.validate()
        assert a.x0 == pytest.approx(li(10.0), abs=1e-12)

    def test_twenty_accepted_steps_match_newton(self):
        anchor = TaylorAnchor.at(10.0)
        steps = [1e-3 * 1.45**k for k in range(20)]  # up to ~2.1
        for y in steps:
            got = taylor_step(anchor, y, n_terms=30)
            ref = li_inverse(anchor.x0 + y, tol=1e-12)
            assert abs(got - ref) / ref < 1e-9

    def test_backward_step(self):
        anchor = TaylorAnchor.at(10.0)
        got = taylor_step(anchor, -0.5, n_terms=30)
        assert got == pytest.approx(li_inverse(anchor.x0 - 0.5, tol=1e-12), rel=1e-10)

    def test_oversized_step_refused(self):
        anchor = TaylorAnchor.at(10.0)
        with pytest.raises(StepTooLargeError):
            taylor_step(anchor, 50.0, n_terms=10)

    @pytest.mark.parametrize("n", [10, 100, 1000])
    def test_chain_matches_newton(self, n):
        newton = nth_prime_approx(n, method="newton")
        chain = nth_prime_approx(n, method="taylor-chain")
        assert abs(chain - newton) / newton < 1e-8

    def test_chain_backward_target(self):
        # target below the bootstrap anchor x0 = li(10) ~ 5.12
        assert _taylor_chain(4.0, 30) == pytest.approx(li_inverse(4.0, tol=1e-12), rel=1e-10)

    def test_unknown_method(self):
        with pytest.raises(DomainError):
            nth_prime_approx(10, method="bogus")

    def test_n_validation(self):
        with pytest.raises(DomainError):
            nth_prime_approx(0)
