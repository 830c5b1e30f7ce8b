"""Exception hierarchy shared by every module."""

from __future__ import annotations


class ShapeGrowthError(Exception):
    """Base class for all library errors."""


class ShapeError(ShapeGrowthError, ValueError):
    """A point set is not a valid shape (empty or disconnected)."""


class InvalidOperation(ShapeGrowthError, ValueError):
    """A growth operation cannot be applied to the given shape."""


class ModelError(ShapeGrowthError, RuntimeError):
    """An internal invariant of the growth model was violated."""


class NotReachable(ShapeGrowthError):
    """The requested target cannot be constructed from the initial shape."""


class ReplayError(ShapeGrowthError):
    """A constructor step failed during replay."""

    def __init__(self, index: int, reason: str):
        super().__init__(f"step {index}: {reason}")
        self.index = index
        self.reason = reason


class FormatError(ShapeGrowthError, ValueError):
    """Malformed input file; carries a 1-based line/column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column
