"""Exception hierarchy shared by all bellsv modules."""


class BellsvError(Exception):
    """Base class for all errors raised by bellsv."""


class ValidationError(BellsvError):
    """Invalid input data: bad shapes, non-finite entries, malformed files."""


class DimensionMismatchError(ValidationError):
    """Two objects that must share a shape do not."""


class EnumerationBudgetError(BellsvError):
    """The exact enumeration would exceed the iteration budget."""

    def __init__(self, required: int, allowed: int):
        self.required = required
        self.allowed = allowed
        super().__init__(
            f"enumeration requires {required} iterations, budget allows {allowed}"
        )


class NumericalError(BellsvError):
    """A numerical routine failed to converge or produced inconsistent output."""


class NoAlphaSolutionError(BellsvError):
    """No solution alpha found."""


class NoRealAlphaSolutionError(NoAlphaSolutionError):
    """No real solution alpha found (the Gram matrix has a negative eigenvalue)."""
