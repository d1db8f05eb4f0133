"""Exception hierarchy shared by all modules."""


class OrbitSeriesError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(OrbitSeriesError, ValueError):
    """Malformed input (bad partition text, nonpositive parts, ...)."""


class DomainError(OrbitSeriesError, ValueError):
    """Input is well formed but outside the domain of the operation."""


class DivisibilityError(OrbitSeriesError, ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class ResourceCeilingError(OrbitSeriesError):
    """Full enumeration refused because the word count exceeds the ceiling."""

    def __init__(self, count, ceiling):
        super().__init__(
            f"enumeration of {count} words exceeds ceiling {ceiling}; "
            "raise the ceiling explicitly to proceed"
        )
        self.count = count
        self.ceiling = ceiling


class ConsistencyError(OrbitSeriesError, RuntimeError):
    """An identity that must hold by construction failed. Always a bug."""
