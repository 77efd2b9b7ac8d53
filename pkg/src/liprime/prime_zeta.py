"""Prime zeta function, its derivative, the twisted Euler product, and the
identities tying them to the Riemann zeta function.

Direct prime sums are truncated at a policy-controlled prime limit; every
truncation carries a signed tail correction from the prime-density integral
(so ``SeriesResult.best`` is the recommended estimate) and a fluctuation
envelope ``tail_estimate`` for the error that the correction cannot remove.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from . import backend
from .errors import CapacityError, DomainError, NearZeroError, PoleError
from .primes import MobiusTable, PrimeTable, mobius_table
from .reports import IdentityReport, SeriesResult
from .special_fn import _e1_complex, zeta, zeta_log_deriv

_CHUNK = 1 << 25  # integers per bitset chunk when streaming primes
_DECADES = (10**4, 10**5, 10**6, 10**7, 10**8, 10**9)

_KIND_PLAIN = 0       # p^-s
_KIND_LOG = 1         # ln p * p^-s
_KIND_HALFPLANE = 2   # ln p / (p^s (p^s - 1))
_KIND_LOG1P = 3       # ln(1 + p^-s)


@dataclass(frozen=True)
class TruncationPolicy:
    prime_limit: int = 10**7
    k_max: int = 64
    tail_tol: float = 1e-12

    def __post_init__(self):
        if self.prime_limit < 100 or self.k_max < 1:
            raise DomainError("prime_limit and k_max must be positive (prime_limit >= 100)")
        if not 0 < self.tail_tol < 1:
            raise DomainError("tail_tol must lie in (0, 1)")


DEFAULT_POLICY = TruncationPolicy()


def _fluctuation(prime_limit: int, sigma: float, log_weight: bool) -> float:
    """Chebyshev/RH-style envelope for the error left after tail correction.

    Prime-count fluctuations around the smooth density are bounded (under the
    usual envelope) by sqrt(t) ln t / (8 pi); weighting by t^-sigma at the
    truncation point gives the scale below.
    """
    base = math.sqrt(prime_limit) * prime_limit ** (-sigma) / (8.0 * math.pi)
    return base * math.log(prime_limit) if log_weight else base


def _effective_prime_limit(sigma: float, policy: TruncationPolicy, table: PrimeTable,
                           log_weight: bool) -> int:
    if policy.prime_limit > table.limit:
        raise CapacityError(
            f"policy prime_limit {policy.prime_limit} exceeds table limit {table.limit}"
        )
    for cand in _DECADES:
        if cand >= policy.prime_limit:
            break
        if _fluctuation(cand, sigma, log_weight) <= policy.tail_tol:
            return cand
    return policy.prime_limit


def _prime_sum(table: PrimeTable, s: complex, prime_limit: int, kind: int) -> complex:
    """Chunked backend sum of the kind-summand over primes <= prime_limit."""
    key = (kind, complex(s), prime_limit)
    cached = table._sum_cache.get(key)
    if cached is not None:
        return cached
    parts_re: list[float] = []
    parts_im: list[float] = []
    for lo in range(0, prime_limit + 1, _CHUNK):
        hi = min(lo + _CHUNK, prime_limit + 1)
        chunk = table.primes_in_range(lo, hi)
        if chunk.size == 0:
            continue
        val = backend.prime_sum_chunk(chunk.astype(float), s.real, s.imag, kind)
        parts_re.append(val.real)
        parts_im.append(val.imag)
    total = complex(math.fsum(parts_re), math.fsum(parts_im))
    table._sum_cache[key] = total
    return total


def prime_zeta_direct(s: complex, policy: TruncationPolicy = DEFAULT_POLICY,
                      table: PrimeTable | None = None) -> SeriesResult:
    """zeta_p(s) = sum over primes of p^-s, truncated, for Re(s) > 1."""
    s = complex(s)
    if s.real <= 1:
        raise DomainError(f"prime_zeta_direct requires Re(s) > 1, got Re(s) = {s.real}")
    table = _require_table(table, policy)
    p_eff = _effective_prime_limit(s.real, policy, table, log_weight=False)
    value = _prime_sum(table, s, p_eff, _KIND_PLAIN)
    correction = _e1_complex((s - 1.0) * math.log(p_eff))
    tail = _fluctuation(p_eff, s.real, log_weight=False)
    return SeriesResult(value=value, terms_used=table.pi(p_eff), tail_estimate=tail,
                        converged=tail <= policy.tail_tol, tail_correction=correction)


def prime_zeta_mobius(s: complex, policy: TruncationPolicy = DEFAULT_POLICY,
                      mob: MobiusTable | None = None) -> SeriesResult:
    """zeta_p(s) = sum_n mu(n)/n ln zeta(ns): valid for Re(s) > 1/2.

    Principal branch of the logarithm throughout; this is the analytic
    continuation used in the strip 1/2 < Re(s) < 1.
    """
    s = complex(s)
    if s.real <= 0.5:
        raise DomainError(f"prime_zeta_mobius requires Re(s) > 1/2, got Re(s) = {s.real}")
    mob = mob if mob is not None else _small_mobius(policy.k_max)
    if mob.limit < policy.k_max:
        raise CapacityError(f"mobius table limit {mob.limit} < k_max {policy.k_max}")
    total = 0.0 + 0.0j
    used = 0
    last_bound = 1.0
    for n in range(1, policy.k_max + 1):
        mu_n = mob[n]
        if mu_n == 0:
            continue
        ns = n * s
        if abs(ns - 1.0) < 1e-9:
            raise PoleError(f"prime_zeta_mobius: summand n={n} puts ns = {ns} at the zeta pole")
        if ns.real <= 0.5:
            raise DomainError(f"prime_zeta_mobius: Re({n}s) <= 1/2, principal branch unsafe")
        z = zeta(ns)
        if s.imag == 0.0:
            # keep a real input on the real axis: a signed-zero imaginary part
            # from the complex series would flip the side of the branch cut
            z = complex(z.real, 0.0)
        total += (mu_n / n) * cmath.log(z)
        used += 1
        last_bound = 2.0 ** (-ns.real)
        if 2.0 * last_bound / n < policy.tail_tol * 1e-2:
            break
    return SeriesResult(value=total, terms_used=used, tail_estimate=last_bound,
                        converged=last_bound <= policy.tail_tol)


def prime_zeta_deriv_direct(s: complex, policy: TruncationPolicy = DEFAULT_POLICY,
                            table: PrimeTable | None = None) -> SeriesResult:
    """zeta_p'(s) = -sum over primes of ln(p) p^-s, truncated, Re(s) > 1."""
    s = complex(s)
    if s.real <= 1:
        raise DomainError(f"prime_zeta_deriv_direct requires Re(s) > 1, got Re(s) = {s.real}")
    table = _require_table(table, policy)
    p_eff = _effective_prime_limit(s.real, policy, table, log_weight=True)
    value = -_prime_sum(table, s, p_eff, _KIND_LOG)
    correction = -(p_eff ** (1.0 - s)) / (s - 1.0)
    tail = _fluctuation(p_eff, s.real, log_weight=True)
    return SeriesResult(value=value, terms_used=table.pi(p_eff), tail_estimate=tail,
                        converged=tail <= policy.tail_tol, tail_correction=correction)


def prime_zeta_deriv_mobius(s: complex, policy: TruncationPolicy = DEFAULT_POLICY) -> SeriesResult:
    """zeta_p'(s) = sum_k mu(k) (zeta'/zeta)(ks), valid for Re(s) > 1/2."""
    s = complex(s)
    if s.real <= 0.5:
        raise DomainError(f"prime_zeta_deriv_mobius requires Re(s) > 1/2, got Re(s) = {s.real}")
    mob = _small_mobius(policy.k_max)
    total = 0.0 + 0.0j
    used = 0
    last_bound = 1.0
    for k in range(1, policy.k_max + 1):
        mu_k = mob[k]
        if mu_k == 0:
            continue
        ks = k * s
        if abs(ks - 1.0) < 1e-9:
            raise PoleError(f"prime_zeta_deriv_mobius: summand k={k} puts ks = {ks} at the pole")
        total += mu_k * zeta_log_deriv(ks)
        used += 1
        last_bound = 2.0 * math.log(2.0) * 2.0 ** (-ks.real)
        if last_bound < policy.tail_tol * 1e-2:
            break
    return SeriesResult(value=total, terms_used=used, tail_estimate=last_bound,
                        converged=last_bound <= policy.tail_tol)


def _deriv_terms_sum(s: complex, policy: TruncationPolicy, table: PrimeTable,
                     weights) -> tuple[complex, int, float]:
    """sum_k weights(k) * zeta_p'(ks) with tail-corrected direct terms."""
    total = 0.0 + 0.0j
    tails = 0.0
    used = 0
    for k in range(1, policy.k_max + 1):
        w = weights(k)
        if w == 0:
            continue
        ks = k * s
        term = prime_zeta_deriv_direct(ks, policy, table)
        total += w * term.best
        tails += abs(w) * term.tail_estimate
        used += 1
        if math.log(2.0) * 2.0 ** (-ks.real) < policy.tail_tol * 1e-2:
            break
    return total, used, tails


def euler_log_deriv_sum(s: complex, policy: TruncationPolicy = DEFAULT_POLICY,
                        table: PrimeTable | None = None) -> IdentityReport:
    """zeta'(s)/zeta(s) against sum_{k>=1} zeta_p'(ks), Re(s) > 1."""
    s = complex(s)
    if s.real <= 1:
        raise DomainError(f"euler_log_deriv_sum requires Re(s) > 1, got Re(s) = {s.real}")
    table = _require_table(table, policy)
    lhs = zeta_log_deriv(s)
    rhs, used, tails = _deriv_terms_sum(s, policy, table, lambda k: 1.0)
    return IdentityReport.of(lhs, rhs, terms_used=(1, used), tail_estimate=tails)


def half_plane_difference(s: complex, policy: TruncationPolicy = DEFAULT_POLICY,
                          table: PrimeTable | None = None) -> SeriesResult:
    """zeta'/zeta(s) - zeta_p'(s) = -sum_p ln(p)/(p^s (p^s - 1)); Re(s) > 1/2."""
    s = complex(s)
    if s.real <= 0.5:
        raise DomainError(f"half_plane_difference requires Re(s) > 1/2, got Re(s) = {s.real}")
    table = _require_table(table, policy)
    p_eff = _effective_prime_limit(2.0 * s.real, policy, table, log_weight=True)
    value = -_prime_sum(table, s, p_eff, _KIND_HALFPLANE)
    correction = -(p_eff ** (1.0 - 2.0 * s) / (2.0 * s - 1.0)
                   + p_eff ** (1.0 - 3.0 * s) / (3.0 * s - 1.0))
    tail = _fluctuation(p_eff, 2.0 * s.real, log_weight=True)
    return SeriesResult(value=value, terms_used=table.pi(p_eff), tail_estimate=tail,
                        converged=tail <= policy.tail_tol, tail_correction=correction)


def tilde_zeta(s: complex, method: str = "ratio",
               policy: TruncationPolicy = DEFAULT_POLICY,
               table: PrimeTable | None = None) -> complex:
    """The twisted Euler product: product over primes of 1/(1 + p^-s).

    ``euler-product`` multiplies the truncated product (with a tail-corrected
    logarithm) and needs Re(s) > 1; ``ratio`` returns zeta(2s)/zeta(s), valid
    for Re(s) > 1/2 away from s = 1, 2s = 1, and zeros of zeta.
    """
    s = complex(s)
    if method == "ratio":
        if s.real <= 0.5:
            raise DomainError(f"tilde_zeta ratio requires Re(s) > 1/2, got Re(s) = {s.real}")
        if abs(2.0 * s - 1.0) < 1e-12:
            raise PoleError("tilde_zeta: zeta(2s) pole at 2s = 1")
        z = zeta(s)
        if abs(z) < 1e-10:
            raise NearZeroError(f"tilde_zeta: zeta({s}) too close to zero")
        return zeta(2.0 * s) / z
    if method == "euler-product":
        if s.real <= 1:
            raise DomainError(f"tilde_zeta euler-product requires Re(s) > 1, got Re(s) = {s.real}")
        table = _require_table(table, policy)
        p_eff = _effective_prime_limit(s.real, policy, table, log_weight=False)
        log_prod = -_prime_sum(table, s, p_eff, _KIND_LOG1P)
        lp = math.log(p_eff)
        log_tail = -(_e1_complex((s - 1.0) * lp) - 0.5 * _e1_complex((2.0 * s - 1.0) * lp))
        return cmath.exp(log_prod + log_tail)
    raise DomainError(f"unknown tilde_zeta method {method!r}")


def tilde_log_deriv_series(s: complex, policy: TruncationPolicy = DEFAULT_POLICY,
                           table: PrimeTable | None = None) -> IdentityReport:
    """tilde-zeta'/tilde-zeta(s) against the alternating sum of zeta_p'(ks).

    The left side uses the ratio form: 2 (zeta'/zeta)(2s) - (zeta'/zeta)(s).
    """
    s = complex(s)
    if s.real <= 1:
        raise DomainError(f"tilde_log_deriv_series requires Re(s) > 1, got Re(s) = {s.real}")
    table = _require_table(table, policy)
    lhs = 2.0 * zeta_log_deriv(2.0 * s) - zeta_log_deriv(s)
    rhs, used, tails = _deriv_terms_sum(s, policy, table, lambda k: (-1.0) ** k)
    return IdentityReport.of(lhs, rhs, terms_used=(2, used), tail_estimate=tails)


def odd_k_identity(s: complex, policy: TruncationPolicy = DEFAULT_POLICY,
                   table: PrimeTable | None = None) -> IdentityReport:
    """(zeta'/zeta)(s) - (zeta'/zeta)(2s) against the odd-k sum of zeta_p'(ks)."""
    s = complex(s)
    if s.real <= 1:
        raise DomainError(f"odd_k_identity requires Re(s) > 1, got Re(s) = {s.real}")
    table = _require_table(table, policy)
    lhs = zeta_log_deriv(s) - zeta_log_deriv(2.0 * s)
    rhs, used, tails = _deriv_terms_sum(s, policy, table, lambda k: 1.0 if k % 2 else 0.0)
    return IdentityReport.of(lhs, rhs, terms_used=(2, used), tail_estimate=tails)


def mobius_inversion_identity(s: complex, policy: TruncationPolicy = DEFAULT_POLICY,
                              table: PrimeTable | None = None) -> IdentityReport:
    """zeta_p'(s) direct against sum_k mu(k) (zeta'/zeta)(ks), Re(s) > 1."""
    s = complex(s)
    if s.real <= 1:
        raise DomainError(f"mobius_inversion_identity requires Re(s) > 1, got Re(s) = {s.real}")
    table = _require_table(table, policy)
    lhs_res = prime_zeta_deriv_direct(s, policy, table)
    rhs_res = prime_zeta_deriv_mobius(s, policy)
    return IdentityReport.of(lhs_res.best, rhs_res.value,
                             terms_used=(lhs_res.terms_used, rhs_res.terms_used),
                             tail_estimate=lhs_res.tail_estimate + rhs_res.tail_estimate)


def cross_method_identity(s: complex, policy: TruncationPolicy = DEFAULT_POLICY,
                          table: PrimeTable | None = None) -> IdentityReport:
    """Tail-corrected direct prime sum against the Mobius-log form, Re(s) > 1."""
    s = complex(s)
    if s.real <= 1:
        raise DomainError(f"cross_method_identity requires Re(s) > 1, got Re(s) = {s.real}")
    table = _require_table(table, policy)
    lhs_res = prime_zeta_direct(s, policy, table)
    rhs_res = prime_zeta_mobius(s, policy)
    return IdentityReport.of(lhs_res.best, rhs_res.value,
                             terms_used=(lhs_res.terms_used, rhs_res.terms_used),
                             tail_estimate=lhs_res.tail_estimate + rhs_res.tail_estimate)


def product_identity(s: complex, policy: TruncationPolicy = DEFAULT_POLICY,
                     table: PrimeTable | None = None) -> IdentityReport:
    """tilde-zeta(s) * zeta(s) against zeta(2s).

    Uses the truncated Euler product for Re(s) > 1 (a real check) and the
    ratio form in the strip 1/2 < Re(s) <= 1 (a consistency check).
    """
    s = complex(s)
    if s.real <= 0.5:
        raise DomainError(f"product_identity requires Re(s) > 1/2, got Re(s) = {s.real}")
    if abs(s - 1.0) < 1e-9:
        raise PoleError("product_identity: zeta pole at s = 1")
    method = "euler-product" if s.real > 1 else "ratio"
    tz = tilde_zeta(s, method, policy, table)
    lhs = tz * zeta(s)
    rhs = zeta(2.0 * s)
    return IdentityReport.of(lhs, rhs, terms_used=(1, 1), tail_estimate=policy.tail_tol)


_DEFAULT_TABLES: dict[int, PrimeTable] = {}


def _require_table(table: PrimeTable | None, policy: TruncationPolicy) -> PrimeTable:
    if table is not None:
        return table
    from .primes import sieve

    tab = _DEFAULT_TABLES.get(policy.prime_limit)
    if tab is None:
        tab = sieve(policy.prime_limit)
        _DEFAULT_TABLES[policy.prime_limit] = tab
    return tab


@lru_cache(maxsize=8)
def _small_mobius(limit: int) -> MobiusTable:
    return mobius_table(limit)
