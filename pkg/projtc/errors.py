from typing import Optional


__all__ = [
    "ProjtcError",
    "PresentationError",
    "InvalidClassError",
    "UnsupportedRankError",
    "OracleCapError",
    "SpecError",
    "InvariantViolation",
    "ExpressionSyntaxError",
]


class ProjtcError(Exception):
    pass


class PresentationError(ProjtcError, ValueError):
    """A ring presentation or an element does not satisfy the presentation rules."""


class InvalidClassError(ProjtcError, ValueError):
    """A characteristic class violates its invariants."""


class UnsupportedRankError(ProjtcError, ValueError):
    pass


class OracleCapError(ProjtcError, ValueError):
    pass


class SpecError(ProjtcError, ValueError):
    """Parse or semantic error in a spec file.

    Args:
        message (str): What went wrong.
        line (int, optional): 1-based line in the spec text.
        column (int, optional): 1-based column in the spec text.
    """
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        return f"{self.line}:{self.column or 1}: {self.message}"


class InvariantViolation(ProjtcError, RuntimeError):
    """A property the theory guarantees does not hold (engine bug or bad presentation)."""


class ExpressionSyntaxError(PresentationError):
    """Syntax error in a class expression. `column` is 1-based inside the expression text."""
    def __init__(self, message: str, column: int):
        self.column = column
        super().__init__(f"{message} (column {column})")
