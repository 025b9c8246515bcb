"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class BracketError(ValueError):
    """A root-finding bracket does not straddle a sign change."""


class ConvergenceError(RuntimeError):
    """An iterative solver exhausted its iteration budget or hit a NaN."""
