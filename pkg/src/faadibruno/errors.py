"""Exception hierarchy shared by all modules."""


class FdbError(Exception):
    """Base class for every error raised by this package."""


class DomainError(FdbError, ValueError):
    """An argument lies outside the domain of an operation."""


class FamilyMismatchError(DomainError):
    """Generators from different families were mixed in one polynomial."""


class MissingImageError(DomainError, KeyError):
    """A substitution map has no image for some generator."""

    def __str__(self):
        return self.args[0] if self.args else "missing image"


class NotUnitalError(DomainError):
    """Reversion requested for a series whose linear coefficient is not 1."""


class ShapeMismatchError(DomainError):
    """Two series (or characters) of incompatible order or arity."""


class CapExceededError(FdbError):
    """A configured size cap would be exceeded."""
