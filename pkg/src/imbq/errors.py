"""Exception types shared across the package."""

__all__ = ["DomainError", "UsageError", "AccuracyError", "ResolutionError"]


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class UsageError(ValueError):
    """Structurally incompatible inputs, e.g. fields on different grids."""


class ResolutionError(UsageError):
    """Grid cannot represent the data: spectral mass too close to Nyquist."""


class AccuracyError(RuntimeError):
    """A quadrature failed to meet its tolerance within the panel budget.

    Carries the best estimate obtained and the error bound achieved so
    callers can still inspect the partial result.
    """

    def __init__(self, message: str, estimate: float, error_bound: float):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound
