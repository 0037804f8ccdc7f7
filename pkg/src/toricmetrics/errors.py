"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class ValidationError(ValueError):
    """Structural data (polytope, potential, config) violates an invariant."""


class NumericalError(RuntimeError):
    """A numerical computation could not be completed reliably."""


class EmptyGridError(DomainError):
    """Requested interior grid is empty at the given margin."""

    def __init__(self, message: str, max_feasible_margin: float):
        super().__init__(message)
        self.max_feasible_margin = max_feasible_margin
