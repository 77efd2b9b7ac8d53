"""Result containers shared by the series and analysis modules."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SeriesResult:
    """A truncated series evaluation.

    ``value`` is the raw partial sum; ``tail_correction`` is a signed (complex)
    estimate of the omitted tail, so ``best`` is the recommended estimate.
    ``tail_estimate`` bounds the error that remains *after* the correction.
    """

    value: complex
    terms_used: int
    tail_estimate: float
    converged: bool
    tail_correction: complex = 0.0

    @property
    def best(self) -> complex:
        return self.value + self.tail_correction


@dataclass(frozen=True)
class IdentityReport:
    """Two independently computed sides of an identity and their residual."""

    lhs: complex
    rhs: complex
    residual: float
    terms_used: tuple[int, ...] = field(default=(0, 0))
    tail_estimate: float = 0.0

    @staticmethod
    def of(lhs: complex, rhs: complex, terms_used: tuple[int, ...] = (0, 0),
           tail_estimate: float = 0.0) -> "IdentityReport":
        return IdentityReport(lhs=lhs, rhs=rhs, residual=abs(lhs - rhs),
                              terms_used=terms_used, tail_estimate=tail_estimate)
