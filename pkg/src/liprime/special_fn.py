"""Core special functions.

li(x) is the offset logarithmic integral with lower limit 2 (so li(2) = 0);
its inverse is computed by safeguarded Newton iteration. The Riemann zeta
function and its logarithmic derivative use a binomial-weighted
alternating-series acceleration valid on Re(s) > 0. E1 is computed by a
power series for small argument and a continued fraction otherwise.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    ConvergenceError,
    DomainError,
    NearSingularWarning,
    NearZeroError,
    PoleError,
)

_EULER_GAMMA = 0.5772156649015328606

_GL_HI = np.polynomial.legendre.leggauss(20)
_GL_LO = np.polynomial.legendre.leggauss(10)


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-11
    rel_tol: float = 1e-13
    max_subdivisions: int = 24

    def __post_init__(self):
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise DomainError("quadrature tolerances must be strictly positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be >= 1")


DEFAULT_QUADRATURE = QuadratureConfig()


def _panel_values(f, lo: np.ndarray, hi: np.ndarray, rule) -> np.ndarray:
    """Gauss-Legendre values of f integrated over each panel [lo_i, hi_i]."""
    nodes, weights = rule
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    x = mid[:, None] + half[:, None] * nodes[None, :]
    return half * (f(x) @ weights)


def _adaptive_gauss(f, a: float, b: float, cfg: QuadratureConfig) -> float:
    """Adaptive subdivision with a fixed-order Gauss rule per panel."""
    if b <= a:
        return 0.0
    n0 = max(4, int(math.ceil(b - a)))
    edges = np.linspace(a, b, n0 + 1)
    lo, hi = edges[:-1], edges[1:]
    total = 0.0
    for _ in range(cfg.max_subdivisions):
        coarse = _panel_values(f, lo, hi, _GL_LO)
        fine = _panel_values(f, lo, hi, _GL_HI)
        err = np.abs(fine - coarse)
        running = total + float(fine.sum())
        tol = max(cfg.abs_tol, cfg.rel_tol * abs(running))
        bad = err > tol * (hi - lo) / (b - a)
        if not bad.any():
            return running
        total += float(fine[~bad].sum())
        lo_b, hi_b = lo[bad], hi[bad]
        mid = 0.5 * (lo_b + hi_b)
        lo = np.concatenate([lo_b, mid])
        hi = np.concatenate([mid, hi_b])
    raise ConvergenceError("adaptive quadrature: subdivision budget exhausted")


def li(x: float, cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """Offset logarithmic integral: integral of dt/ln t from 2 to x (x >= 2)."""
    if not math.isfinite(x):
        raise DomainError("li requires finite x")
    if x < 2:
        raise DomainError(f"li requires x >= 2, got {x}")
    if x == 2:
        return 0.0
    # t = e^v turns the integrand into e^v / v on [ln 2, ln x]
    return _adaptive_gauss(lambda v: np.exp(v) / v, math.log(2.0), math.log(x), cfg)


def li_inverse(
    y: float,
    tol: float = 1e-10,
    cfg: QuadratureConfig | None = None,
    t0: float | None = None,
    max_iter: int = 100,
) -> float:
    """Solve li(t) = y for t >= 2 by safeguarded Newton iteration.

    The Newton step t <- t - (li(t) - y) ln t uses li' = 1/ln t; a bracket
    [2, t_hi] is maintained and bisection used whenever the step leaves it.
    ``t0`` optionally warm-starts the iteration.
    """
    if not math.isfinite(y):
        raise DomainError("li_inverse requires finite y")
    if y < 0:
        raise DomainError(f"li_inverse requires y >= 0, got {y}")
    if cfg is None:
        cfg = QuadratureConfig(abs_tol=min(tol * 0.05, 1e-11), rel_tol=1e-13)
    if y == 0:
        return 2.0
    t_lo = 2.0
    t_hi = max(4.0, y * math.log(y + 2.0) * 2.0, t0 or 0.0)
    while li(t_hi, cfg) < y:
        t_hi *= 2.0
    if t0 is not None and 2.0 < t0 < t_hi:
        t = t0
    else:
        t = max(3.0, y * math.log(y + 2.0)) if y >= 2 else 3.0
        t = min(t, t_hi)
    for _ in range(max_iter):
        r = li(t, cfg) - y
        if abs(r) <= tol:
            return t
        if r > 0:
            t_hi = t
        else:
            t_lo = t
        t_next = t - r * math.log(t)
        if not t_lo < t_next < t_hi:
            t_next = 0.5 * (t_lo + t_hi)
        t = t_next
    raise ConvergenceError(f"li_inverse failed to reach |li(t)-y| <= {tol} in {max_iter} iterations")


@lru_cache(maxsize=8)
def _borwein_coefficients(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Binomial-weighted eta coefficients (-1)^k (d_k - d_n)/d_n and ln(k+1)."""
    d = []
    acc = 0
    for i in range(n + 1):
        acc += math.factorial(n + i - 1) * 4**i // (math.factorial(n - i) * math.factorial(2 * i))
        d.append(n * acc)
    dn = d[n]
    ek = np.array([(-1.0) ** k * ((d[k] - dn) / dn) for k in range(n)])
    k1 = np.arange(1, n + 1, dtype=np.float64)
    return ek, np.log(k1), k1


def _eta_and_deriv(s: complex, terms: int) -> tuple[complex, complex]:
    ek, logk1, _ = _borwein_coefficients(terms)
    powers = np.exp(-s * logk1)
    eta = -np.sum(ek * powers)
    eta_prime = np.sum(ek * logk1 * powers)
    return complex(eta), complex(eta_prime)


def _check_zeta_domain(s: complex) -> complex:
    s = complex(s)
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise DomainError("zeta requires finite s")
    if abs(s - 1.0) < 1e-12:
        raise PoleError("zeta has a simple pole at s = 1")
    if s.real <= 0:
        raise DomainError(f"zeta evaluation requires Re(s) > 0, got Re(s) = {s.real}")
    return s


def _eta_prefactor(s: complex) -> complex:
    w = 1.0 - cmath.exp((1.0 - s) * math.log(2.0))
    if abs(w) < 1e-12:
        warnings.warn(
            f"s = {s}: eta prefactor 1 - 2^(1-s) is nearly zero; result is ill-conditioned",
            NearSingularWarning,
            stacklevel=3,
        )
    return w


def zeta(s: complex, terms: int = 64) -> complex:
    """Riemann zeta on Re(s) > 0 via accelerated alternating (eta) series.

    The truncation error of the underlying eta sum decays like
    (3 + sqrt(8))^-terms, amplified by exp(pi |Im s| / 2).
    """
    s = _check_zeta_domain(s)
    eta, _ = _eta_and_deriv(s, terms)
    return eta / _eta_prefactor(s)


def zeta_log_deriv(s: complex, terms: int = 64) -> complex:
    """zeta'(s)/zeta(s) by term-wise differentiation of the accelerated series."""
    s = _check_zeta_domain(s)
    eta, eta_prime = _eta_and_deriv(s, terms)
    w = _eta_prefactor(s)
    z = eta / w
    if abs(z) < 1e-10:
        raise NearZeroError(f"zeta({s}) = {z} is too close to zero for a log-derivative")
    w_prime = math.log(2.0) * cmath.exp((1.0 - s) * math.log(2.0))
    return eta_prime / eta - w_prime / w


def _e1_series(z: complex) -> complex:
    total = -_EULER_GAMMA - cmath.log(z)
    term = 1.0 + 0j
    for k in range(1, 60):
        term *= -z / k
        total -= term / k
        if abs(term) < 1e-18 * max(1.0, abs(total)) * k:
            break
    return total

def _e1_continued_fraction(z: complex) -> complex:
    # modified Lentz on E1(z) = e^-z / (z + 1 - 1/(z + 3 - 4/(z + 5 - ...)))
    tiny = 1e-300
    b = z + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for k in range(1, 300):
        a = -k * k
        b += 2.0
        d = b + a * d
        if abs(d) < tiny:
            d = tiny
        c = b + a / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return cmath.exp(-z) * h


def _e1_complex(z: complex) -> complex:
    """E1 for complex z with Re(z) > 0 (series near 0, continued fraction else)."""
    if abs(z) <= 1.5:
        return _e1_series(z)
    return _e1_continued_fraction(z)


def exp_integral_e1(x: float) -> float:
    """Exponential integral E1(x) = integral of e^-v / v from x to infinity."""
    if not (isinstance(x, (int, float)) and math.isfinite(x)):
        raise DomainError("exp_integral_e1 requires finite real x")
    if x <= 0:
        raise DomainError(f"exp_integral_e1 requires x > 0, got {x}")
    return _e1_complex(complex(x)).real
