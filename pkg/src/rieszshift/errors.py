"""Exception types raised by the library."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of a function."""


class ConvergenceError(RuntimeError):
    """A series or quadrature failed to reach its tolerance within budget.

    The best available estimate is attached as ``estimate`` (may be None).
    """

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class ConditioningError(ArithmeticError):
    """A quantity is too small to be represented or divided by reliably."""
