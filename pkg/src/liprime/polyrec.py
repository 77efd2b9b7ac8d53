"""Exact polynomial machinery for the inverse logarithmic integral.

Writing f = li_inverse and g = ln f, the derivative law f' = ln f gives
g' = g e^-g, and the n-th derivative has the closed form
g^(n) = e^(-n g) P_n(g) with integer polynomials obeying

    P_0(x) = x,    P_{n+1}(x) = x (-n P_n(x) + P_n'(x)).

Coefficients grow factorially and cancel heavily, so the recurrence is run
in exact integer arithmetic; floats only appear at evaluation time.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import DivergenceWarning, DomainError, StepTooLargeError, TailTooLargeError
from . import special_fn

_ACCEPT_RATIO = 1e-14


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; coeffs[i] multiplies x^i."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = self.coeffs
        if len(c) > 1 and c[-1] == 0:
            raise ValueError("trailing coefficient must be nonzero (or the zero polynomial)")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1]

    def derivative(self) -> "IntPolynomial":
        if len(self.coeffs) == 1:
            return IntPolynomial((0,))
        d = tuple(i * c for i, c in enumerate(self.coeffs))[1:]
        return IntPolynomial(_strip(d))

    def __call__(self, x: float) -> float:
        return eval_poly(self, x)


def _strip(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    n = len(coeffs)
    while n > 1 and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


def pn_polynomials(n_max: int) -> list[IntPolynomial]:
    """[P_0, ..., P_n_max] computed exactly from the recurrence."""
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    polys = [IntPolynomial((0, 1))]  # P_0 = x
    for n in range(n_max):
        pn = polys[n].coeffs
        dpn = polys[n].derivative().coeffs
        width = max(len(pn), len(dpn))
        inner = tuple(
            -n * (pn[i] if i < len(pn) else 0) + (dpn[i] if i < len(dpn) else 0)
            for i in range(width)
        )
        polys.append(IntPolynomial(_strip((0,) + inner)))
    return polys


_PN_CACHE: list[IntPolynomial] = pn_polynomials(0)


def _pn(n_terms: int) -> list[IntPolynomial]:
    global _PN_CACHE
    if len(_PN_CACHE) < n_terms:
        _PN_CACHE = pn_polynomials(max(n_terms - 1, 2 * (len(_PN_CACHE) - 1)))
    return _PN_CACHE[:n_terms]


def eval_poly(p: IntPolynomial, x: float) -> float:
    """Horner evaluation; integer coefficients are floated term by term."""
    acc = 0.0
    try:
        for c in reversed(p.coeffs):
            acc = acc * x + float(c)
    except OverflowError as exc:
        raise OverflowError(f"coefficient {max(map(abs, p.coeffs))} exceeds float range") from exc
    if math.isinf(acc):
        raise OverflowError("polynomial evaluation overflowed float range")
    return acc


def _series_terms(x: float, y: float, n_terms: int) -> list[float]:
    polys = _pn(n_terms)
    terms = []
    yn = 1.0
    for n in range(n_terms):
        terms.append(eval_poly(polys[n], x) * yn / math.factorial(n))
        yn *= y
    return terms


def gen_function_l(x: float, y: float, n_terms: int) -> tuple[float, float]:
    """Partial sum of sum_n P_n(x) y^n / n! and the magnitude of its last term."""
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    terms = _series_terms(x, y, n_terms)
    last = abs(terms[-1])
    if n_terms > 1 and last > abs(terms[0]) and terms[0] != 0.0:
        warnings.warn(
            f"l({x}, {y}): last term {last:.3e} exceeds first term; series is diverging",
            DivergenceWarning,
            stacklevel=2,
        )
    return math.fsum(terms), last


def pde_residual(
    x: float,
    y: float,
    n_terms: int,
    h_step: float,
    finite_difference: bool = False,
) -> float:
    """Residual of the PDE satisfied by h(x,y) = sum_n P_n(x) y^(n+1)/(n+1)!.

    The recurrence is equivalent to the exact source-term form

        (1 + x y) dh/dy = P_0(x) + x dh/dx + x h,

    whose residual this returns (term-wise analytic partials by default;
    ``finite_difference=True`` uses central differences with ``h_step`` as an
    independent cross-check).
    """
    if n_terms < 2:
        raise DomainError("n_terms must be >= 2")
    polys = _pn(n_terms)
    tail = abs(_series_terms(x, y, n_terms)[-1]) * abs(y) / n_terms
    if tail > 1e-12:
        raise TailTooLargeError(
            f"series tail {tail:.3e} at (x={x}, y={y}) exceeds 1e-12; raise n_terms"
        )

    def h_val(xx: float, yy: float) -> float:
        return math.fsum(
            eval_poly(polys[n], xx) * yy ** (n + 1) / math.factorial(n + 1)
            for n in range(n_terms)
        )

    h = h_val(x, y)
    if finite_difference:
        if h_step <= 0:
            raise DomainError("h_step must be positive for the finite-difference check")
        h_y = (h_val(x, y + h_step) - h_val(x, y - h_step)) / (2 * h_step)
        h_x = (h_val(x + h_step, y) - h_val(x - h_step, y)) / (2 * h_step)
    else:
        h_y = math.fsum(
            eval_poly(polys[n], x) * y**n / math.factorial(n) for n in range(n_terms)
        )
        h_x = math.fsum(
            eval_poly(polys[n].derivative(), x) * y ** (n + 1) / math.factorial(n + 1)
            for n in range(n_terms)
        )
    p0 = eval_poly(polys[0], x)
    return abs((1.0 + x * y) * h_y - p0 - x * h_x - x * h)


@dataclass(frozen=True)
class TaylorAnchor:
    """A point where the inverse is known: x0, f0 = li_inverse(x0), g0 = ln f0."""

    x0: float
    f0: float
    g0: float

    def __post_init__(self):
        if self.f0 < 2:
            raise DomainError("anchor requires f0 >= 2")
        if abs(self.g0 - math.log(self.f0)) > 1e-12 * max(1.0, abs(self.g0)):
            raise DomainError("anchor requires g0 = ln f0")

    @classmethod
    def at(cls, f0: float, cfg: special_fn.QuadratureConfig | None = None) -> "TaylorAnchor":
        x0 = special_fn.li(f0, cfg or special_fn.DEFAULT_QUADRATURE)
        return cls(x0=x0, f0=f0, g0=math.log(f0))

    def validate(self, tol: float = 1e-8) -> None:
        if abs(special_fn.li(self.f0) - self.x0) > tol:
            raise DomainError(f"anchor inconsistent: |li(f0) - x0| > {tol}")


def taylor_step(anchor: TaylorAnchor, y: float, n_terms: int = 30) -> float:
    """f(x0 + y) by Taylor expansion of g = ln f around the anchor.

    g(x0+y) = sum_n P_n(g0) (e^-g0 y)^n / n!; the step is accepted only when
    the truncated series' last-term ratio is below 1e-14, otherwise the
    caller must subdivide.
    """
    if n_terms < 2:
        raise DomainError("n_terms must be >= 2")
    z = math.exp(-anchor.g0) * y
    terms = _series_terms(anchor.g0, z, n_terms)
    g_new = math.fsum(terms)
    ratio = abs(terms[-1]) / max(abs(g_new), 1e-300)
    if ratio > _ACCEPT_RATIO:
        raise StepTooLargeError(
            f"step y={y} refused: last-term ratio {ratio:.3e} > {_ACCEPT_RATIO}"
        )
    return math.exp(g_new)


def _taylor_chain(x_target: float, n_terms: int, min_step: float = 1e-8) -> float:
    anchor = _bootstrap_anchor()
    x = anchor.x0
    while x != x_target:
        remaining = x_target - x
        step = remaining
        while True:
            try:
                f_new = taylor_step(anchor, step, n_terms)
                break
            except StepTooLargeError:
                step *= 0.5
                if abs(step) < min_step:
                    raise
        x += step
        anchor = TaylorAnchor(x0=x, f0=f_new, g0=math.log(f_new))
    return anchor.f0


_BOOTSTRAP: TaylorAnchor | None = None


def _bootstrap_anchor() -> TaylorAnchor:
    """Chain bootstrap at (li(10), 10): keeps ln f comfortably above 1."""
    global _BOOTSTRAP
    if _BOOTSTRAP is None:
        _BOOTSTRAP = TaylorAnchor.at(10.0)
    return _BOOTSTRAP


def nth_prime_approx(n: int, method: str = "newton", n_terms: int = 30) -> float:
    """li_inverse(n), the smooth approximation to the n-th prime."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if method == "newton":
        return special_fn.li_inverse(float(n), tol=1e-12)
    if method == "taylor-chain":
        return _taylor_chain(float(n), n_terms)
    raise DomainError(f"unknown method {method!r}; use 'newton' or 'taylor-chain'")
