"""Exception hierarchy shared by every formwell layer."""

from typing import Iterable, Optional, Tuple


class FormwellError(Exception):
    """Base class for all errors raised by formwell."""


class DivisionByZero(FormwellError, ZeroDivisionError):
    pass


class DegreeMismatch(FormwellError, ValueError):
    pass


class SingularMetric(FormwellError, ValueError):
    pass


class IrrationalVolume(FormwellError, ValueError):
    """sqrt|det g| is not rational, so the volume form has no exact representation."""


class NotHolomorphicCase(FormwellError, ValueError):
    pass


class NotConstantLorenz(FormwellError, ValueError):
    pass


class NonFiniteResult(FormwellError, ArithmeticError):
    pass


class InvariantViolation(FormwellError, AssertionError):
    """An identity that holds by construction failed; always a bug."""


class ParseError(FormwellError, ValueError):
    """
    Input text does not conform to the grammar.

    Attributes:
        message (str): Human readable description.
        line (int): 1-based line of the offending token.
        col (int): 1-based column of the offending token.
        expected (Tuple[str, ...]): Sorted names of tokens that would have been accepted.
    """

    def __init__(self, message: str, line: int = 1, col: int = 1, expected: Optional[Iterable[str]] = None):
        self.message = message
        self.line = line
        self.col = col
        self.expected: Tuple[str, ...] = tuple(sorted(set(expected or ())))
        super().__init__(str(self))

    def relocate(self, line: int, col_offset: int) -> "ParseError":
        """Return a copy positioned inside a larger document."""
        return type(self)(self.message, line, self.col + col_offset, self.expected)

    def __str__(self) -> str:
        return f"{self.line}:{self.col}: {self.message}"


class ZeroDenominator(ParseError):
    pass


class MixedGeneratorUse(ParseError):
    pass


class ProblemError(ParseError):
    """A problem file parsed lexically but is not a valid problem."""


class MissingMetric(ProblemError):
    pass


class DuplicateKey(ProblemError):
    pass


class UnknownKey(ProblemError):
    pass


class UnknownValue(ProblemError):
    pass
