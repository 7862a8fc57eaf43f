"""Exception types shared across the package."""


class NonEuclidError(Exception):
    """Base class for all package errors."""


class DomainError(NonEuclidError):
    """Arguments outside the domain where a formula is valid."""


class NonConvergence(NonEuclidError):
    """An iterative scheme exhausted its budget before reaching tolerance."""

    def __init__(self, message: str, value: float = float("nan"),
                 err_estimate: float = float("inf"), evals: int = 0):
        super().__init__(message)
        self.value = value
        self.err_estimate = err_estimate
        self.evals = evals


class NonFiniteIntegrand(NonEuclidError):
    """The integrand returned NaN or infinity at an interior node."""
