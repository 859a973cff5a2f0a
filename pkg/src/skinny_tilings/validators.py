"""
Oracle validation of engine outputs.

This module re-derives the leading terms of transfer-matrix results by
direct enumeration of the corresponding regions and fails loudly on any
disagreement.
"""

import logging
from typing import Any, Callable, Dict, Sequence, Tuple

from .enumerators import TilingEnumerator, strip_entry
from .exceptions import OracleMismatchError
from .matrices import mat_pow
from .regions import Region, build_cross, build_frame, build_rectangle
from .transfers import build_tm
from .types import CrossSpec, FrameSpec, TilingMode


class OracleValidator:
    """
    Checks transfer-matrix results against direct enumeration.

    This class is responsible for:
    - Re-counting the first terms of rectangle, frame and cross sequences
    - Re-counting entries of frame hole tables
    - Checking transfer-matrix powers against clipped-strip counts
    - Raising OracleMismatchError with the offending term
    """

    def __init__(self, mode: TilingMode = TilingMode.DIMER, weighted: bool = False, limit: int = 4):
        """
        Initialize the validator.

        Args:
            mode: Which tiles are allowed
            weighted: Compare weight enumerators instead of counts
            limit: How many leading terms to re-check
        """
        if limit < 0:
            raise ValueError("Oracle limit cannot be negative")
        self.mode = mode
        self.weighted = weighted
        self.limit = limit
        self.enumerator = TilingEnumerator(mode, weighted)
        self.logger = logging.getLogger(__name__)

    def _check_terms(
        self, label: str, terms: Sequence[Any], region_for: Callable[[int], Region]
    ) -> int:
        checked = 0
        for n, value in enumerate(terms[: self.limit]):
            expected = self.enumerator.count(region_for(n))
            if expected != value:
                raise OracleMismatchError(label, n, value, expected)
            checked += 1
        self.logger.info(f"{label}: {checked} terms agree with direct enumeration")
        return checked

    def validate_rect_seq(self, m: int, terms: Sequence[Any]) -> int:
        """Re-check m x n rectangle counts; returns the number of terms checked."""
        return self._check_terms(f"Rect({m})", terms, lambda n: build_rectangle(m, n))

    def validate_frame_seq(self, a1: int, a2: int, b1: int, b2: int, terms: Sequence[Any]) -> int:
        """Re-check square-hole frame counts."""
        spec = FrameSpec(a1, a2, b1, b2)
        return self._check_terms(
            f"Frame({a1},{a2},{b1},{b2})", terms, lambda n: build_frame(spec.with_hole(n, n))
        )

    def validate_cross_seq(self, a: int, b: int, terms: Sequence[Any]) -> int:
        """Re-check cross counts by arm length."""
        return self._check_terms(
            f"Cross({a},{b})", terms, lambda n: build_cross(CrossSpec(a, b, n))
        )

    def validate_frame_table(
        self, a1: int, a2: int, b1: int, b2: int, table: Dict[Tuple[int, int], Any]
    ) -> int:
        """Re-check hole-table entries with m, n below the limit."""
        label = f"Frame({a1},{a2},{b1},{b2})"
        spec = FrameSpec(a1, a2, b1, b2)
        checked = 0
        for (m, n), value in sorted(table.items()):
            if m >= self.limit or n >= self.limit:
                continue
            expected = self.enumerator.count(build_frame(spec.with_hole(m, n)))
            if expected != value:
                raise OracleMismatchError(f"{label} hole {m}x{n}", n, value, expected)
            checked += 1
        self.logger.info(f"{label}: {checked} table entries agree with direct enumeration")
        return checked

    def validate_tm_powers(self, m: int, max_power: int) -> int:
        """
        Check every entry of TM(m)^n, n <= max_power, against strip counts.

        Entry (i, j) must count the tilings of the m x n rectangle whose first
        column offers only the cells of state i and whose protrusions leave
        state j free in column n + 1.
        """
        matrix = build_tm(m, self.mode).matrix
        checked = 0
        for n in range(max_power + 1):
            power = mat_pow(matrix, n)
            for i in range(power.n_rows):
                for j in range(power.n_cols):
                    expected = strip_entry(m, n, i, j, self.mode)
                    if power[i, j] != expected:
                        raise OracleMismatchError(f"TM({m})^{n} entry ({i},{j})", n, power[i, j], expected)
                    checked += 1
        self.logger.info(f"TM({m}): {checked} power entries agree with strip counts")
        return checked
