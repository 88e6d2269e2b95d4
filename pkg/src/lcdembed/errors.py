"""Exception types shared across the package.

The CLI maps these onto exit codes: parse/validation problems exit 2,
guard violations exit 3, violated mathematical preconditions exit 4.
"""

from __future__ import annotations


class FieldMismatchError(ValueError):
    """Operands belong to different fields, or a value is not a field element."""


class DimensionError(ValueError):
    """Matrix shapes are not conformal for the requested operation."""


class RankDeficientError(ValueError):
    """A generator matrix does not have full row rank."""


class SingularMatrixError(ValueError):
    """A matrix that must be invertible is singular."""


class GuardExceededError(RuntimeError):
    """An exhaustive computation would exceed its size guard."""


class ParseError(ValueError):
    """Malformed matrix file, with a best-effort source location."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", token {column}" if column is not None else "") + ")"
        super().__init__(message + where)
