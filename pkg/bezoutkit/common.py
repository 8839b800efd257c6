"""Provide common functions and the errors used throughout the library."""
from typing import Any, NoReturn, Optional, Sequence


def assert_never(value: NoReturn) -> NoReturn:
    """
    Signal to mypy to perform an exhaustive matching.

    Please see the following page for more details:
    https://hakibenita.com/python-mypy-exhaustive-checking
    """
    assert False, f"Unhandled value: {value} ({type(value).__name__})"


class Error(Exception):
    """Represent an anticipated failure of a library operation."""

    def __init__(self, message: str) -> None:
        """Initialize with the given values."""
        super().__init__(message)
        self.message = message


class MathematicalNegative(Error):
    """Signal that the answer is a mathematical "no", usually with a witness."""


class UsageError(Error):
    """Signal that the input does not satisfy the requirements of the operation."""


class ResourceBound(Error):
    """Signal that a configured bound (factoring, precision, search) was hit."""


class NotDivisible(MathematicalNegative):
    """Signal that the divisor does not divide the dividend."""


class NotAUnit(MathematicalNegative):
    """Signal that an inverse was requested for a non-unit."""


class NotNeat(MathematicalNegative):
    """Signal that no neat decomposition exists for the given comaximal pair."""

    def __init__(self, message: str, witness: Sequence[Any]) -> None:
        """Initialize with the given values."""
        super().__init__(message)
        self.witness = tuple(witness)


class NotAdequate(MathematicalNegative):
    """Signal that the divisor loop stagnated, so no adequate decomposition exists."""

    def __init__(self, message: str, witness: Optional[Any] = None) -> None:
        """Initialize with the given values."""
        super().__init__(message)
        self.witness = witness


class NoCoprimeBasis(MathematicalNegative):
    """Signal that the elements admit no pairwise comaximal refinement."""


class ParseError(UsageError):
    """Signal malformed text in the element or matrix grammar."""

    def __init__(self, message: str, position: int) -> None:
        """Initialize with the given values."""
        super().__init__(f"{message} at position {position}")
        self.position = position


class PrecisionFlagInvalid(UsageError):
    """Signal that a precision was given where the ring has no truncation."""


class ZeroDenominator(UsageError):
    """Signal a rational with the zero denominator."""


class DivisionByZero(UsageError):
    """Signal a division by the zero element."""


class UnsupportedRing(UsageError):
    """Signal that the operation is not available for the given ring."""


class NotUnimodular(UsageError):
    """Signal that the given elements do not generate the unit ideal."""


class MatrixTooLarge(UsageError):
    """Signal that a matrix exceeds the dimension cap of the minor oracle."""


class RingMismatch(UsageError):
    """Signal that the elements do not belong to the same ring."""


class ZeroElement(UsageError):
    """Signal that the operation needs a nonzero element."""


class InvalidArguments(UsageError):
    """Signal malformed command-line arguments."""


class FactorizationBoundExceeded(ResourceBound):
    """Signal that trial division could not certify a factorization within the bound."""


class PrecisionExhausted(ResourceBound):
    """Signal that truncation hides the order of an element."""


class SearchExhausted(ResourceBound):
    """Signal that a bounded search found no verified certificate."""
