"""Exception types raised by the library."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class InvalidBodyError(ValueError):
    """A body violates its representation invariants."""


class UnsupportedExactError(ValueError):
    """The exact construction is not available for the requested exponent."""


class ContainmentError(ValueError):
    """A required containment between two bodies does not hold."""


class LPError(RuntimeError):
    """The linear programming kernel could not produce an optimal solution."""

    def __init__(self, message, solution=None):
        super().__init__(message)
        self.solution = solution


class ConvergenceError(RuntimeError):
    """An iteration did not reach its tolerance; carries the partial trace."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace
