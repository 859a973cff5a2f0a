#!/usr/bin/env python3
"""
Test module for region-file and term-list ingestion.

This module contains tests for the RegionFileProcessor class: parsing
cells and cuts, reporting malformed lines, and reading exact term lists.
"""

import os
import tempfile
import unittest
from fractions import Fraction

from skinny_tilings.exceptions import DuplicateCellError, RegionParseError
from skinny_tilings.processors import RegionFileProcessor, parse_region_file
from skinny_tilings.regions import Cell, build_rectangle, make_cut


class TestRegionFileProcessor(unittest.TestCase):
    """Test cases for the RegionFileProcessor class."""

    def setUp(self):
        """Set up test fixtures."""
        self.processor = RegionFileProcessor()
        self.square_text = "# a 2x2 square\n0 0\n1 0\n\n0 1\n1 1\n"

        self.temp_region_file = tempfile.NamedTemporaryFile(mode='w', suffix='.txt', delete=False)
        self.temp_region_file.write(self.square_text)
        self.temp_region_file.close()

    def tearDown(self):
        """Clean up temporary files after tests."""
        try:
            os.unlink(self.temp_region_file.name)
        except FileNotFoundError:
            pass

    def test_parse_region(self):
        """Comments and blank lines are skipped."""
        region = self.processor.parse_region_file(self.square_text)
        self.assertEqual(region, build_rectangle(2, 2))

    def test_parse_region_with_cut(self):
        """Cut lines forbid a domino across two cells."""
        region = parse_region_file("0 0\n1 0\ncut 1 0 0 0\n")
        self.assertEqual(region.cuts, frozenset({make_cut((0, 0), (1, 0))}))
        self.assertFalse(region.can_join(Cell(0, 0), Cell(1, 0)))

    def test_malformed_lines(self):
        """Malformed lines are reported with their line number."""
        cases = {
            "0 0\n0 x\n": 2,
            "0 0 0\n": 1,
            "0 0\n1 0\ncut 0 0 1\n": 3,
            "0 0\n2 0\ncut 0 0 2 0\n": 3,
            "0 0\ncut 0 0 1 0\n": 2,
        }
        for text, line_number in cases.items():
            with self.subTest(text=text):
                with self.assertRaises(RegionParseError) as ctx:
                    self.processor.parse_region_file(text)
                self.assertEqual(ctx.exception.line_number, line_number)

    def test_duplicate_cell(self):
        """A repeated cell names its line."""
        with self.assertRaises(DuplicateCellError) as ctx:
            self.processor.parse_region_file("0 0\n1 0\n0 0\n")
        self.assertEqual(ctx.exception.cell, (0, 0))
        self.assertEqual(ctx.exception.line_number, 3)

    def test_load_region_file(self):
        """Regions load from disk."""
        region = self.processor.load_region_file(self.temp_region_file.name)
        self.assertEqual(region.cell_count, 4)

    def test_load_missing_file(self):
        """Missing files raise FileNotFoundError."""
        with self.assertRaises(FileNotFoundError):
            self.processor.load_region_file("/nonexistent/region.txt")

    def test_parse_terms(self):
        """Integers and fractions, separated by commas or whitespace."""
        terms = self.processor.parse_terms("1, 2 3/4\n# comment\n[5, -6]\n")
        self.assertEqual(terms, [1, 2, Fraction(3, 4), 5, -6])
        self.assertIsInstance(self.processor.parse_terms("4/2")[0], int)

    def test_parse_terms_rejects_garbage(self):
        """Non-numeric tokens and zero denominators are errors."""
        for text in ("1 two 3", "1/0"):
            with self.subTest(text=text):
                with self.assertRaises(RegionParseError):
                    self.processor.parse_terms(text)


if __name__ == '__main__':
    unittest.main()
