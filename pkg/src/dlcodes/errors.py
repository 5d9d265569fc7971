"""Exception hierarchy shared by every dlcodes module."""

from __future__ import annotations


class DLCodesError(Exception):
    """Base class for all library errors."""


# finite fields
class NonPrimeCharacteristic(DLCodesError, ValueError):
    pass


class ReducibleModulus(DLCodesError, ValueError):
    pass


class DegreeMismatch(DLCodesError, ValueError):
    pass


class FieldMismatch(DLCodesError, ValueError):
    pass


class DivisionByZero(DLCodesError, ZeroDivisionError):
    pass


class InvalidFrobeniusBase(DLCodesError, ValueError):
    pass


class FieldTooLarge(DLCodesError, ValueError):
    pass


# geometry
class ArityMismatch(DLCodesError, ValueError):
    pass


class UnsupportedFamilyForClosedForm(DLCodesError, ValueError):
    pass


class NonDivisibleCount(DLCodesError, ArithmeticError):
    pass


# section spaces
class IndexOutOfRange(DLCodesError, IndexError):
    pass


class InsufficientVanishing(DLCodesError, ValueError):
    pass


# code construction
class HypothesisViolation(DLCodesError, ValueError):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class RankDeficient(DLCodesError, ArithmeticError):
    def __init__(self, message: str, rank: int, rows: int):
        super().__init__(message)
        self.rank = rank
        self.rows = rows


class UnsupportedTwist(DLCodesError, ValueError):
    pass


# bounds
class MissingIntersectionNumber(DLCodesError, ValueError):
    pass


# minimum distance
class BudgetExceeded(DLCodesError, RuntimeError):
    pass


# file formats
class ParseError(DLCodesError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
