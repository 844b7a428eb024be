"""Exception types shared across the package."""


class SpexError(Exception):
    """Base class for all errors raised by spex."""


class DomainError(SpexError, ValueError):
    """A parameter or argument lies outside the operation's domain."""


class CapacityError(SpexError):
    """The input exceeds a size cap of the representation or algorithm."""


class PrecisionError(SpexError):
    """A requested numerical width cannot be met in floating point."""


class ValidationError(SpexError, ValueError):
    """Structured input failed a consistency check."""


class ParseError(SpexError, ValueError):
    """Malformed serialized input.

    ``offset`` is the byte offset of the first offending character.
    """

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset
