"""
Exception hierarchy for skinny-tilings.

Every error raised on purpose by the package derives from SkinnyTilingError,
so callers (and the command-line surface) can separate computation failures
from programming errors.
"""

from typing import Optional, Tuple


class SkinnyTilingError(Exception):
    """Base class for all package errors."""


class ConfigurationError(SkinnyTilingError):
    """Raised when an environment setting has an invalid value."""


class UsageError(SkinnyTilingError):
    """Raised for malformed command-line input."""


class RegionError(SkinnyTilingError):
    """Raised for invalid region data."""


class RegionParseError(RegionError):
    """Raised when a region file line cannot be parsed."""

    def __init__(self, line_number: int, line: str, reason: str):
        self.line_number = line_number
        self.line = line
        super().__init__(f"line {line_number}: {reason}: {line!r}")


class DuplicateCellError(RegionError):
    """Raised when a region lists the same cell twice."""

    def __init__(self, cell: Tuple[int, int], line_number: Optional[int] = None):
        self.cell = cell
        self.line_number = line_number
        where = f" (line {line_number})" if line_number is not None else ""
        super().__init__(f"duplicate cell ({cell[0]}, {cell[1]}){where}")


class ArithmeticDomainError(SkinnyTilingError):
    """Raised when an exact-arithmetic operation is undefined for its input."""


class ZeroDenominatorError(ArithmeticDomainError, ZeroDivisionError):
    """Raised when a rational function is given a zero denominator."""

    def __init__(self) -> None:
        super().__init__("division by zero polynomial")


class NoPowerSeriesError(ArithmeticDomainError):
    """Raised when a rational function has no power series at t=0."""

    def __init__(self) -> None:
        super().__init__("no power series at t=0")


class WidthCapError(SkinnyTilingError):
    """Raised when a transfer matrix is requested beyond the width cap."""

    def __init__(self, width: int, cap: int):
        self.width = width
        self.cap = cap
        super().__init__(f"strip width {width} exceeds the configured cap {cap}")


class SideError(SkinnyTilingError):
    """Raised when a corner matrix is requested with identical sides."""


class GuessError(SkinnyTilingError):
    """Raised when a guessing routine receives unusable input."""


class SequenceError(SkinnyTilingError):
    """Raised when a sequence does not meet a statistic's preconditions."""


class OracleMismatchError(SkinnyTilingError):
    """Raised when an engine disagrees with the direct enumeration oracle."""

    def __init__(self, label: str, index: int, engine_value: object, oracle_value: object):
        self.label = label
        self.index = index
        self.engine_value = engine_value
        self.oracle_value = oracle_value
        super().__init__(
            f"{label}: term {index} is {engine_value} but direct enumeration gives {oracle_value}"
        )
