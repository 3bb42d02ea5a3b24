"""Exception hierarchy shared by every subind module."""


class SubindError(Exception):
    """Base class for all subind errors."""


class GroundMismatchError(SubindError):
    """A subset was built over a different ground set than the one expected."""


class EnumerationCapError(SubindError):
    """A powerset or quantifier domain is larger than the configured cap."""


class OverlapError(SubindError):
    """Sets that must be disjoint share elements."""


class PreconditionError(SubindError):
    """An operation was called with arguments outside its domain."""


class UnknownNameError(SubindError):
    """An element, concept, distribution or registry name does not exist."""


class SpecError(SubindError):
    """A spec, distribution, pairs or registry file is malformed.

    ``location`` names the file and, when known, the line/column or the dotted
    field path of the offending value.
    """

    def __init__(self, message: str, location: str | None = None) -> None:
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class InvariantViolationError(SubindError):
    """A proven property failed on a validated submodular function.

    This always indicates a bug in subind, never a property of the input.
    """
