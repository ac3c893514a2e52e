"""Exception types shared across the package.

The CLI maps these onto process exit codes: DomainError -> 2,
ConvergenceError -> 3, DivergenceError -> 4.
"""
from __future__ import annotations


class SharpcritError(Exception):
    """Base class for all package errors."""


class DomainError(SharpcritError, ValueError):
    """A parameter violates a documented domain restriction."""


class ConvergenceError(SharpcritError, ArithmeticError):
    """A numerical routine failed to reach its requested accuracy."""


class QuadratureError(ConvergenceError):
    """Adaptive quadrature did not converge within the subdivision budget.

    Carries the achieved estimate and the error bound at the point of failure.
    """

    def __init__(self, message: str, estimate: float, error_bound: float):
        super().__init__(f"{message} (estimate={estimate!r}, error_bound={error_bound!r})")
        self.estimate = estimate
        self.error_bound = error_bound


class DivergenceError(SharpcritError, ArithmeticError):
    """An integral is divergent for the supplied input.

    This is a mathematically meaningful outcome, not a numerical failure;
    the detected non-integrable exponent is attached.
    """

    def __init__(self, message: str, detected_exponent: float):
        super().__init__(f"{message} (detected non-integrable exponent {detected_exponent!r})")
        self.detected_exponent = detected_exponent


class ExistenceRegionError(DomainError):
    """An operation requiring an existence-region spec was given one outside it."""


class BracketError(DomainError):
    """A root/threshold bracket does not classify the way the search requires."""
