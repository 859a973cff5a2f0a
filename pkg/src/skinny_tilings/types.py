"""
Type definitions for skinny-tilings.

This module provides the enums, value dataclasses and type aliases shared
by the counting engines, the C-finite toolkit and the command-line surface.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union


class TilingMode(Enum):
    """Which tiles are allowed."""
    DIMER = "dimer"
    MONOMER_DIMER = "md"

    @property
    def allows_monomers(self) -> bool:
        return self is TilingMode.MONOMER_DIMER

    @property
    def weight_variables(self) -> Tuple[str, ...]:
        """Variables of the weight enumerator: h, v and (for monomers) m."""
        if self is TilingMode.MONOMER_DIMER:
            return ("h", "v", "m")
        return ("h", "v")


class Side(Enum):
    """Sides of a corner rectangle, numbered counter-clockwise from the top."""
    UP = 1
    LEFT = 2
    DOWN = 3
    RIGHT = 4


class VerifyStatus(Enum):
    """Outcome of checking a recurrence against data under an order bound."""
    PROVED_UNDER_BOUND = "ProvedUnderBound"
    INCONCLUSIVE = "Inconclusive"
    REFUTED = "Refuted"


class CiucuClass(Enum):
    """Square classification of a symmetric-region tiling count."""
    SQUARE = "Square"
    TWICE_SQUARE = "TwiceSquare"
    NEITHER = "Neither"


class OutputFormat(Enum):
    """Command-line output format."""
    PLAIN = "plain"
    JSON = "json"


@dataclass(frozen=True)
class FrameSpec:
    """
    A rectangular picture frame.

    The outer rectangle is (a1 + m + a2) rows by (b1 + n + b2) columns; the
    m x n hole sits a1 rows above the bottom and b1 columns right of the
    left edge.
    """
    a1: int
    a2: int
    b1: int
    b2: int
    m: int = 0
    n: int = 0

    def __post_init__(self) -> None:
        """Validate frame thicknesses and hole size."""
        if min(self.a1, self.a2, self.b1, self.b2) < 1:
            raise ValueError("Frame thicknesses must be positive")
        if self.m < 0 or self.n < 0:
            raise ValueError("Hole dimensions cannot be negative")

    @property
    def outer_height(self) -> int:
        return self.a1 + self.m + self.a2

    @property
    def outer_width(self) -> int:
        return self.b1 + self.n + self.b2

    @property
    def cell_count(self) -> int:
        return self.outer_height * self.outer_width - self.m * self.n

    def with_hole(self, m: int, n: int) -> "FrameSpec":
        return FrameSpec(self.a1, self.a2, self.b1, self.b2, m, n)


@dataclass(frozen=True)
class CrossSpec:
    """A cross: a central block of height b and width a, with four arms of length n."""
    a: int
    b: int
    n: int = 0

    def __post_init__(self) -> None:
        """Validate centre dimensions and arm length."""
        if self.a < 1 or self.b < 1:
            raise ValueError("Cross centre dimensions must be positive")
        if self.n < 0:
            raise ValueError("Cross arm length cannot be negative")

    @property
    def cell_count(self) -> int:
        return self.a * self.b + 2 * self.n * (self.a + self.b)


@dataclass(frozen=True)
class GuessConfig:
    """Configuration for recurrence and generating-function guessing."""
    max_order: int = 40
    margin: int = 5

    def __post_init__(self) -> None:
        """Validate guessing bounds."""
        if self.max_order < 1:
            raise ValueError("max_order must be at least 1")
        if self.margin < 1:
            raise ValueError("margin must be at least 1")


@dataclass(frozen=True)
class MomentRecord:
    """Exact moments of one tile-count random variable."""
    index: int
    total: Fraction
    mean: Fraction
    variance: Optional[Fraction] = None
    third_central: Optional[Fraction] = None
    fourth_central: Optional[Fraction] = None
    skewness_squared: Optional[Fraction] = None
    kurtosis: Optional[Fraction] = None

    def __post_init__(self) -> None:
        """Validate moment record."""
        if self.total <= 0:
            raise ValueError("Weight enumerator total must be positive")
        if self.variance is not None and self.variance < 0:
            raise ValueError("Variance cannot be negative")


@dataclass
class MomentReport:
    """Per-n moment records for a family of weight enumerators."""
    variable: str
    up_to: int
    records: List[MomentRecord] = field(default_factory=list)

    def __post_init__(self) -> None:
        """Validate report settings."""
        if not 1 <= self.up_to <= 4:
            raise ValueError("Moments are reported up to order 4")


@dataclass(frozen=True)
class GrowthEstimate:
    """A decimal estimate of a dominant growth ratio with its error bound."""
    value: str
    error: str
    index: int


class ResultKind(Enum):
    """What an analysis produced; selects how it is rendered."""
    COUNT = "count"
    POLYNOMIAL = "polynomial"
    SEQUENCE = "sequence"
    RATIONAL_FUNCTION = "rational_function"
    BIVARIATE_GF = "bivariate_gf"
    CFINITE = "cfinite"
    FLAG = "flag"
    VERIFY_STATUS = "verify_status"
    MOMENTS = "moments"
    GROWTH = "growth"


@dataclass
class AnalysisResult:
    """One command's outcome: its parameters, its value and any hole table behind it."""
    kind: ResultKind
    params: Dict[str, object]
    value: object
    table: Optional[Dict[Tuple[int, int], int]] = None
    oracle_checked: int = 0


# Type aliases
Rational = Union[int, Fraction]
Terms = List[int]
RationalTerms = List[Rational]
Table = Dict[Tuple[int, int], int]
FilePath = str
