"""Exception types shared across the package."""


class LiprimeError(Exception):
    """Base class for all liprime errors."""


class DomainError(LiprimeError, ValueError):
    """An argument violates an operation's stated domain."""


class PoleError(DomainError):
    """Evaluation requested at a pole."""


class ConvergenceError(LiprimeError, ArithmeticError):
    """An iteration or subdivision budget was exhausted before converging."""


class NearZeroError(LiprimeError, ArithmeticError):
    """A denominator is too close to zero to divide safely."""


class CapacityError(LiprimeError, ValueError):
    """A table limit exceeds the configured maximum."""


class StepTooLargeError(LiprimeError, ValueError):
    """A Taylor step was refused; the caller must subdivide."""


class TailTooLargeError(LiprimeError, ArithmeticError):
    """A truncated series still has a non-negligible tail."""


class DegenerateFitError(LiprimeError, ValueError):
    """Too few usable data points for a regression."""


class DivergenceWarning(UserWarning):
    """A partial sum shows no sign of converging."""


class NearSingularWarning(UserWarning):
    """Evaluation close to a removable numerical singularity."""
