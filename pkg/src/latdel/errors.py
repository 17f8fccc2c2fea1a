"""Exception types shared across the package."""


class LatdelError(Exception):
    """Base class for all domain errors raised by this package."""


class ParameterError(LatdelError):
    """Invalid name, argument value, or dimension."""


class CapacityError(LatdelError):
    """Requested enumeration exceeds the supported desk-scale size."""


class DegreeError(LatdelError):
    """Series truncation degree too small for the requested coefficient."""


class HypothesisViolation(LatdelError):
    """A binary word breaks the run-structure assumptions (must start with
    a zero and end with a one so the run count is even)."""

    def __init__(self, message: str, word=None):
        super().__init__(message)
        self.word = word


class ConstructionError(LatdelError):
    """A code construction failed its internal verification step."""
