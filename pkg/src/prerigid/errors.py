"""Exception hierarchy shared by every module."""


class PrerigidError(Exception):
    """Base class for all errors raised by the workbench."""


class CompositionError(PrerigidError):
    """Endpoints of two morphisms do not match."""


class CategoryMismatch(PrerigidError):
    """Morphisms from different categories were combined."""


class ValidationError(PrerigidError):
    """An object, morphism or fixture violates its invariants."""


class NotPreDual(PrerigidError):
    """A candidate pre-dual fails the universal property at some test object."""


class Unsupported(PrerigidError):
    """The requested structure is not available on this category."""


class UnsupportedBase(Unsupported):
    """A construction needs more from its base category than it offers."""


class BoundRequired(PrerigidError):
    """An infinite object was queried without a degree bound."""


class TransferBlocked(PrerigidError):
    """The unit object is not preserved up to iso by the adjunction."""


class InvalidAlgebra(PrerigidError):
    pass


class InvalidCoalgebra(PrerigidError):
    pass


class SchemaError(PrerigidError):
    """A JSON fixture does not match its schema."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location
        self.message = message
