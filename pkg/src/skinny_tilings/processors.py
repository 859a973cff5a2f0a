"""
Input processing for skinny-tilings.

This module loads region files and term lists from disk or text and turns
them into Regions and exact number sequences.
"""

import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import List, Set, Tuple

from .exceptions import DuplicateCellError, RegionParseError
from .polynomials import canonical_number
from .regions import Cell, Cut, Region, make_cut
from .types import FilePath, Rational

_TERM_SEPARATORS = re.compile(r"[\s,]+")


class RegionFileProcessor:
    """
    Handles region and term-list ingestion.

    This class is responsible for:
    - Reading text files (UTF-8, with a latin-1 fallback)
    - Parsing the one-cell-per-line region format, including cut lines
    - Parsing whitespace- or comma-separated term lists
    - Reporting malformed input with its line number
    """

    def __init__(self):
        """Initialize the processor."""
        self.logger = logging.getLogger(__name__)

    def load_region_file(self, file_path: FilePath) -> Region:
        """
        Load a region from a file.

        Args:
            file_path: Path to the region file

        Returns:
            The parsed region
        """
        text = self._read_text(file_path)
        region = self.parse_region_file(text)
        self.logger.info(f"Loaded {region.cell_count} cells from {file_path}")
        return region

    def parse_region_file(self, text: str) -> Region:
        """
        Parse region file text.

        Each non-blank line not starting with '#' is either ``x y`` (a cell) or
        ``cut x1 y1 x2 y2`` (two adjacent cells no domino may join).

        Args:
            text: File contents

        Returns:
            The region of listed cells

        Raises:
            RegionParseError: On a malformed line
            DuplicateCellError: If a cell appears twice
        """
        cells: Set[Cell] = set()
        cuts: List[Tuple[int, Cut]] = []
        for line_number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if fields[0].lower() == "cut":
                cuts.append((line_number, self._parse_cut(fields[1:], line_number, raw)))
                continue
            if len(fields) != 2:
                raise RegionParseError(line_number, raw, "expected two integers 'x y'")
            cell = Cell(*self._parse_ints(fields, line_number, raw))
            if cell in cells:
                raise DuplicateCellError(tuple(cell), line_number)
            cells.add(cell)

        for line_number, (a, b) in cuts:
            if a not in cells or b not in cells:
                raise RegionParseError(line_number, f"cut {a.x} {a.y} {b.x} {b.y}",
                                       "cut refers to a cell outside the region")
        return Region(frozenset(cells), frozenset(cut for _, cut in cuts))

    def load_terms_file(self, file_path: FilePath) -> List[Rational]:
        """Load an exact number sequence from a file."""
        terms = self.parse_terms(self._read_text(file_path))
        self.logger.info(f"Loaded {len(terms)} terms from {file_path}")
        return terms

    def parse_terms(self, text: str) -> List[Rational]:
        """
        Parse integers or fractions (``p/q``) separated by whitespace or commas.

        Lines starting with '#' are ignored.
        """
        terms: List[Rational] = []
        for line_number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            for token in _TERM_SEPARATORS.split(line.strip("[]")):
                if not token:
                    continue
                try:
                    terms.append(canonical_number(Fraction(token)))
                except (ValueError, ZeroDivisionError):
                    raise RegionParseError(line_number, raw, f"not an exact number: {token!r}") from None
        return terms

    def _parse_ints(self, fields: List[str], line_number: int, raw: str) -> List[int]:
        try:
            return [int(f) for f in fields]
        except ValueError:
            raise RegionParseError(line_number, raw, "coordinates must be integers") from None

    def _parse_cut(self, fields: List[str], line_number: int, raw: str) -> Cut:
        if len(fields) != 4:
            raise RegionParseError(line_number, raw, "expected 'cut x1 y1 x2 y2'")
        x1, y1, x2, y2 = self._parse_ints(fields, line_number, raw)
        try:
            return make_cut((x1, y1), (x2, y2))
        except ValueError as e:
            raise RegionParseError(line_number, raw, str(e)) from None

    def _read_text(self, file_path: FilePath) -> str:
        path = Path(file_path)
        if not path.exists():
            raise FileNotFoundError(f"File not found: {file_path}")
        if not path.is_file():
            raise ValueError(f"Path is not a file: {file_path}")
        try:
            return path.read_text(encoding="utf-8")
        except UnicodeDecodeError:
            self.logger.warning(f"{file_path} is not UTF-8, retrying as latin-1")
            return path.read_text(encoding="latin-1")


def parse_region_file(text: str) -> Region:
    """Parse region file text (see RegionFileProcessor.parse_region_file)."""
    return RegionFileProcessor().parse_region_file(text)
