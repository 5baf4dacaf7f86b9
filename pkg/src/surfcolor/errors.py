"""Exception types shared across the package."""


class SurfColorError(Exception):
    """Base class for all errors raised by surfcolor."""


class EmbeddingError(SurfColorError, ValueError):
    """Malformed rotation system (duplicate or missing dart, loop, parallel edge)."""


class NotACycleError(SurfColorError, ValueError):
    pass


class PreconditionError(SurfColorError, ValueError):
    """An operation was called outside its domain."""


class FormatError(SurfColorError, ValueError):
    """A text file could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InvariantError(SurfColorError, RuntimeError):
    """An internal guarantee failed; this indicates a bug."""
