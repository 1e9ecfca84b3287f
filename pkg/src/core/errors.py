"""Exception hierarchy shared by the computational modules and the CLI."""


class QuiverGrassError(Exception):
    """Base class for all library errors."""


class PreconditionError(QuiverGrassError, ValueError):
    """A documented precondition of an operation does not hold."""


class MalformedQuiverError(PreconditionError):
    """A coefficient quiver is not a disjoint union of correctly labelled strings."""


class ResourceBoundError(QuiverGrassError):
    """A configured enumeration or recurrence bound would be exceeded."""


class InexactDivisionError(QuiverGrassError, ArithmeticError):
    """A Laurent polynomial division left a nonzero remainder."""


class IdentityViolation(QuiverGrassError, AssertionError):
    """Two independent constructions of the same quantity disagree."""
