"""Exception types shared across the library."""


class PreconditionError(ValueError):
    """An argument violates a documented precondition of an operation."""


class AnalyticityError(ArithmeticError):
    """A computation degraded numerically.

    Raised when a result that should be analytic carries negative-frequency
    energy above tolerance, or when a coefficient tail overflows. Usually
    means the sample count is too small for the data at hand.
    """
