"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class AccuracyError(ArithmeticError):
    """A grid is too small or too coarse for the requested tolerance."""


class NumericalError(ArithmeticError):
    """A linear-algebra step produced values that cannot be trusted."""
