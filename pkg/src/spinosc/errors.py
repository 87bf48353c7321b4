"""Exception types shared across the package."""


class SpinoscError(Exception):
    """Base class for all domain errors raised by this package."""


class SignatureError(SpinoscError):
    """An element or weight does not match the expected algebra signature."""


class IndexRangeError(SpinoscError):
    """A generator or weight index is zero or outside the signature's ranks."""


class GradingError(SpinoscError):
    """An operation required a homogeneous element and got a mixed one."""


class RootError(SpinoscError):
    """A vector is not a root of the requested root system."""


class ModuleError(SpinoscError):
    """A module operation was applied outside its domain."""


class TruncationError(SpinoscError):
    """An enumeration over an infinite-rank object needs a finite truncation."""


class ParseError(SpinoscError):
    """Input text does not conform to the element grammar."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
