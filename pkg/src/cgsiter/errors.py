"""Exception hierarchy shared by the whole package."""

from __future__ import annotations


class CGSError(Exception):
    """Base class for every error raised by cgsiter."""


class UsageError(CGSError, ValueError):
    """A function was called outside its contract (ring mismatch, zero input, ...)."""


class ParseError(CGSError):
    """Malformed polynomial text or problem file.

    ``pos`` is a 0-based character offset into the parsed text; ``line`` and
    ``column`` are 1-based and filled in when parsing whole files.
    """

    def __init__(self, message: str, pos: int | None = None,
                 line: int | None = None, column: int | None = None) -> None:
        self.message = message
        self.pos = pos
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line is not None:
            return f"line {self.line}, column {self.column or 1}: {self.message}"
        if self.pos is not None:
            return f"position {self.pos}: {self.message}"
        return self.message


class ResourceLimitError(CGSError):
    """Iteration or wall-time budget exhausted; carries the partial statistics."""

    def __init__(self, message: str, stats=None, segments=None) -> None:
        super().__init__(message)
        self.stats = stats
        self.segments = segments or []


class InvariantError(CGSError, AssertionError):
    """A debug-mode invariant check failed."""
