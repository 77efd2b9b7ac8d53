"""Error-series experiments around the inverse logarithmic integral.

Compares the smooth n-th-prime approximation li_inverse(n) against the true
primes: per-n error tables, a log-log exponent fit, the prime-sum vs
smooth-sum comparison series with its first-order majorant, the sum-vs-
integral comparison, and the closed-form integral identity for
the prime-density Dirichlet integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFitError, DomainError
from .primes import PrimeTable
from .reports import IdentityReport, SeriesResult
from .special_fn import (
    DEFAULT_QUADRATURE,
    QuadratureConfig,
    _adaptive_gauss,
    _e1_complex,
    li_inverse,
)

_SCALING_EXPONENT = 0.52  # just above 1/2: the envelope exponent used for scaled_err


@dataclass(frozen=True)
class ErrorRow:
    """One comparison point: the n-th prime against li_inverse(n)."""

    n: int
    p_n: int
    li_inv: float
    abs_err: float
    scaled_err: float


_LI_INV_CACHE = np.empty(0)


def _li_inv_grid(n_max: int) -> np.ndarray:
    """li_inverse(n) for n = 1..n_max; grown incrementally, Newton warm-started."""
    global _LI_INV_CACHE
    if _LI_INV_CACHE.size < n_max:
        vals = np.empty(n_max)
        vals[: _LI_INV_CACHE.size] = _LI_INV_CACHE
        t = float(_LI_INV_CACHE[-1]) if _LI_INV_CACHE.size else None
        for n in range(_LI_INV_CACHE.size + 1, n_max + 1):
            t = li_inverse(float(n), tol=1e-10, t0=t)
            vals[n - 1] = t
        _LI_INV_CACHE = vals
    return _LI_INV_CACHE[:n_max]


def approx_error_table(n_max: int, table: PrimeTable) -> list[ErrorRow]:
    """Rows |li_inverse(n) - p_n| for n = 1..n_max, in index order."""
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    if n_max > table.pi(table.limit):
        raise DomainError(
            f"n_max = {n_max} exceeds pi({table.limit}) = {table.pi(table.limit)}"
        )
    primes = table.primes()[:n_max]
    approx = _li_inv_grid(n_max)
    rows = []
    for n, (p, a) in enumerate(zip(primes, approx), start=1):
        err = float(abs(a - float(p)))
        rows.append(ErrorRow(n=n, p_n=int(p), li_inv=float(a), abs_err=err,
                             scaled_err=err / n**_SCALING_EXPONENT))
    return rows


def fit_error_exponent(ns, errs) -> float:
    """Least-squares slope of log(err) against log(n); zero errors are skipped."""
    ns = np.asarray(ns, dtype=float)
    errs = np.asarray(errs, dtype=float)
    keep = errs > 0
    if keep.sum() < 10:
        raise DegenerateFitError(f"only {int(keep.sum())} usable rows; need at least 10")
    slope, _ = np.polyfit(np.log(ns[keep]), np.log(errs[keep]), 1)
    return float(slope)


def exponent_fit(n_min: int, n_max: int, table: PrimeTable) -> float:
    """Growth exponent alpha of |li_inverse(n) - p_n| over n in [n_min, n_max]."""
    if not n_max > n_min >= 10:
        raise DomainError("require n_max > n_min >= 10")
    rows = approx_error_table(n_max, table)[n_min - 1 :]
    return fit_error_exponent([r.n for r in rows], [r.abs_err for r in rows])


def comparison_series(s: complex, n_max: int, table: PrimeTable) -> IdentityReport:
    """Partial sums of p_n^-s against li_inverse(n)^-s, with a first-order majorant.

    The report's tail_estimate holds the majorant
    |s| * sum_n |li_inverse(n) - p_n| * (li_inverse(n)^-(sigma+1) + p_n^-(sigma+1)),
    which dominates the residual by the mean value theorem applied to u^-s.
    """
    s = complex(s)
    if s.real <= 1:
        raise DomainError(f"comparison_series requires Re(s) > 1, got Re(s) = {s.real}")
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    primes = table.primes()[:n_max].astype(float)
    if primes.size < n_max:
        raise DomainError(f"n_max = {n_max} exceeds pi({table.limit})")
    approx = _li_inv_grid(n_max)
    lhs = complex(np.sum(primes ** (-s)))
    rhs = complex(np.sum(approx ** (-s)))
    err = np.abs(approx - primes)
    sig1 = s.real + 1.0
    majorant = abs(s) * float(np.sum(err * (approx ** -sig1 + primes ** -sig1)))
    return IdentityReport.of(lhs, rhs, terms_used=(n_max, n_max), tail_estimate=majorant)


def error_series_partial(sigma: float, epsilon: float, n_max: int,
                         table: PrimeTable) -> tuple[SeriesResult, SeriesResult]:
    """The two error series sum |f(n) - p_n| / f(n)^(sigma+1) and / p_n^(sigma+1).

    The convergence flag is a comparison-series exponent test: with the
    observed envelope |f(n) - p_n| <= C n^(1/2 + epsilon), both series are
    dominated by C * sum n^-(sigma + 1/2 - epsilon), so converged is set iff
    that comparison exponent q = sigma + 1/2 - epsilon exceeds 1; the tail
    estimate is the integral tail C * n_max^(1-q) / (q-1) of the dominating
    series (infinite when q <= 1).
    """
    if sigma <= 0:
        raise DomainError(f"error_series_partial requires sigma > 0, got {sigma}")
    if not 0 <= epsilon < 0.5:
        raise DomainError("epsilon must lie in [0, 0.5)")
    primes = table.primes()[:n_max].astype(float)
    if primes.size < n_max:
        raise DomainError(f"n_max = {n_max} exceeds pi({table.limit})")
    approx = _li_inv_grid(n_max)
    err = np.abs(approx - primes)
    n = np.arange(1, n_max + 1, dtype=float)
    c_emp = float(np.max(err / n ** (0.5 + epsilon)))
    q = sigma + 0.5 - epsilon
    if q > 1:
        tail = c_emp * n_max ** (1.0 - q) / (q - 1.0)
        converged = True
    else:
        tail = math.inf
        converged = False
    out = []
    for denom in (approx, primes):
        val = float(np.sum(err * denom ** -(sigma + 1.0)))
        out.append(SeriesResult(value=val, terms_used=n_max, tail_estimate=tail,
                                converged=converged))
    return out[0], out[1]


def integral_vs_sum(s: complex, n_max: int,
                    cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> IdentityReport:
    """sum_{n<=n_max} f(n)^-s against the integral of f(t)^-s over [1, n_max].

    f = li_inverse. The integral starts at t = 1 (not 0): f stays >= 2 and
    bounded there, so the omitted piece is a constant offset that interval-wise
    difference bounds never see. Substituting u = f(t), du = ln(u) dt, and then
    u = e^v turns the integral into int e^((1-s)v) / v dv over
    [ln f(1), ln f(n_max)], which needs only two inverse evaluations.
    The tail_estimate holds the interval-wise mean-value bound
    sum_n |s| ln(f(n+1)) f(n)^-(Re(s)+1) plus the dangling endpoint term.
    """
    s = complex(s)
    if s.real <= 1:
        raise DomainError(f"integral_vs_sum requires Re(s) > 1, got Re(s) = {s.real}")
    if n_max < 2:
        raise DomainError("n_max must be >= 2")
    approx = _li_inv_grid(n_max)
    lhs = complex(np.sum(approx ** (-s)))
    v_lo, v_hi = math.log(approx[0]), math.log(approx[-1])
    if s.imag == 0:
        rhs = complex(_adaptive_gauss(lambda v: np.exp((1.0 - s.real) * v) / v,
                                      v_lo, v_hi, cfg))
    else:
        re = _adaptive_gauss(lambda v: np.exp((1.0 - s.real) * v) * np.cos(s.imag * v) / v,
                             v_lo, v_hi, cfg)
        im = _adaptive_gauss(lambda v: -np.exp((1.0 - s.real) * v) * np.sin(s.imag * v) / v,
                             v_lo, v_hi, cfg)
        rhs = complex(re, im)
    sig1 = s.real + 1.0
    bound = abs(s) * float(np.sum(np.log(approx[1:]) * approx[:-1] ** -sig1))
    bound += float(approx[-1] ** -s.real)
    return IdentityReport.of(lhs, rhs, terms_used=(n_max, n_max), tail_estimate=bound)


def integral_identity_check(s: float, cfg: QuadratureConfig = DEFAULT_QUADRATURE,
                            h_step: float = 1e-4) -> tuple[IdentityReport, IdentityReport]:
    """The Dirichlet integral int_2^inf du / (u^s ln u) against its closed forms.

    Returns two reports: the value against E1((s-1) ln 2), and the central-
    difference s-derivative against -2^(1-s)/(s-1).
    """
    if not s > 1:
        raise DomainError(f"integral_identity_check requires s > 1, got {s}")
    if h_step <= 0 or s - h_step <= 1:
        raise DomainError("h_step must be positive with s - h_step > 1")

    def quad_value(ss: float) -> float:
        # u = e^v: integrand e^((1-ss) v) / v on [ln 2, cutoff]
        v_lo = math.log(2.0)
        v_hi = v_lo + 45.0 / (ss - 1.0)
        return _adaptive_gauss(lambda v: np.exp((1.0 - ss) * v) / v, v_lo, v_hi, cfg)

    value = quad_value(s)
    closed = _e1_complex(complex((s - 1.0) * math.log(2.0))).real
    value_report = IdentityReport.of(value, closed, terms_used=(1, 1),
                                     tail_estimate=cfg.abs_tol)

    deriv = (quad_value(s + h_step) - quad_value(s - h_step)) / (2.0 * h_step)
    closed_deriv = -(2.0 ** (1.0 - s)) / (s - 1.0)
    deriv_report = IdentityReport.of(deriv, closed_deriv, terms_used=(2, 1),
                                     tail_estimate=h_step**2)
    return value_report, deriv_report
