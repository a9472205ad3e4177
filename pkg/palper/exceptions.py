"""Exception hierarchy shared by the palper modules and the command line."""


class PalperError(Exception):
    """Base class for every error raised by palper."""


class WordError(PalperError, ValueError):
    """A word is outside the domain of the requested operation."""


class SequenceError(PalperError, ValueError):
    """A sequence recipe is invalid or names an unknown builtin."""


class CapExceededError(PalperError):
    """A configured resource cap was reached before a result was settled."""

    def __init__(self, message, cap):
        super().__init__(message)
        self.cap = cap


class StabilizationError(CapExceededError):
    """Factor statistics kept changing up to the prefix cap."""


class UnboundedInventoryError(CapExceededError):
    """Palindromic periodicities were still present at the longest probed length."""


class DomainError(PalperError, ValueError):
    """A numeric argument is outside the range where the operation is defined."""
