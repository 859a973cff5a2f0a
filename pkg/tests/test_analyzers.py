#!/usr/bin/env python3
"""
Test module for the TilingAnalyzer orchestrator.
"""

import os
import tempfile
import unittest

from skinny_tilings.analyzers import TilingAnalyzer
from skinny_tilings.config import Settings
from skinny_tilings.exceptions import GuessError, UsageError
from skinny_tilings.polynomials import MultiPoly, UniPoly, rf_normalize
from skinny_tilings.recurrences import CFinite
from skinny_tilings.types import GuessConfig, ResultKind, TilingMode

DIMER = TilingMode.DIMER
MD = TilingMode.MONOMER_DIMER


class TestTilingAnalyzer(unittest.TestCase):
    """Test cases for the TilingAnalyzer class."""

    def setUp(self):
        """Set up test fixtures."""
        self.analyzer = TilingAnalyzer(Settings())
        self.config = GuessConfig(max_order=4, margin=5)

        self.temp_region_file = tempfile.NamedTemporaryFile(mode='w', suffix='.txt', delete=False)
        self.temp_region_file.write("0 0\n1 0\n0 1\n1 1\n")
        self.temp_region_file.close()

    def tearDown(self):
        """Clean up temporary files after tests."""
        try:
            os.unlink(self.temp_region_file.name)
        except FileNotFoundError:
            pass

    def test_count(self):
        """Region files are counted in either mode."""
        self.assertEqual(self.analyzer.count(self.temp_region_file.name, DIMER).value, 2)
        self.assertEqual(self.analyzer.count(self.temp_region_file.name, MD).value, 7)
        weighted = self.analyzer.count_weighted(self.temp_region_file.name, DIMER)
        self.assertEqual(weighted.kind, ResultKind.POLYNOMIAL)
        self.assertEqual(weighted.value.at_ones(), 2)

    def test_rect_seq_with_oracle(self):
        """The leading terms are re-checked by direct enumeration."""
        result = self.analyzer.rect_seq(2, 6, DIMER, verify=True)
        self.assertEqual(result.value, [1, 1, 2, 3, 5, 8])
        self.assertEqual(result.oracle_checked, 4)
        self.assertEqual(self.analyzer.rect_seq(2, 6, DIMER).oracle_checked, 0)

    def test_frame_and_cross_sequences(self):
        """Terms count hole sizes and arm lengths from 0."""
        frames = self.analyzer.frame_seq([2, 2, 2, 2], 3, DIMER, verify=True)
        self.assertEqual(frames.value, [36, 196, 1444])
        self.assertEqual(frames.oracle_checked, 3)
        self.assertEqual(frames.params["a1"], 2)
        crosses = self.analyzer.cross_seq(2, 2, 3, DIMER)
        self.assertEqual(crosses.value, [2, 8, 72])

    def test_frame_gf(self):
        """Thin rings always have two tilings."""
        result = self.analyzer.frame_gf([1, 1, 1, 1], None, self.config, DIMER)
        self.assertEqual(result.kind, ResultKind.RATIONAL_FUNCTION)
        self.assertEqual(result.value, rf_normalize(UniPoly([2]), UniPoly([1, -1])))
        self.assertEqual(result.params["terms"], 13)

    def test_frame_gf_bivariate(self):
        """The thin-ring hole table is constant."""
        config = GuessConfig(max_order=4, margin=3)
        result = self.analyzer.frame_gf_bivariate([1, 1, 1, 1], 8, config, DIMER)
        self.assertEqual(result.value.numerator, MultiPoly.constant(2, ("x", "y")))
        self.assertEqual(len(result.table), 64)
        self.assertTrue(all(value == 2 for value in result.table.values()))

    def test_guess_and_equal(self):
        """Guessing from terms, then comparing codings."""
        result = self.analyzer.guess([0, 1, 1, 2, 3, 5, 8, 13, 21, 34], self.config)
        self.assertEqual(result.value, CFinite((0, 1), (1, 1)))
        self.assertIsNone(self.analyzer.guess([1, 2], self.config).value)
        flag = self.analyzer.equal(result.value, CFinite((0, 1, 1), (1, 1, 0)))
        self.assertTrue(flag.value)

    def test_moments(self):
        """Moment reports for a rectangle family."""
        result = self.analyzer.moments("rect", [2], 4, DIMER, "h")
        self.assertEqual(result.kind, ResultKind.MOMENTS)
        self.assertEqual(len(result.value.records), 4)
        self.assertEqual(result.value.records[2].mean, 1)

    def test_usage_errors(self):
        """Bad term counts, families and variables."""
        with self.assertRaises(UsageError):
            self.analyzer.rect_seq(2, 0, DIMER)
        with self.assertRaises(UsageError):
            self.analyzer.moments("rect", [2], 4, DIMER, "m")
        with self.assertRaises(UsageError):
            self.analyzer.moments("blob", [2], 4, DIMER, "h")
        with self.assertRaises(UsageError):
            self.analyzer.moments("frame", [1, 2], 4, DIMER, "h")
        with self.assertRaises(UsageError):
            self.analyzer.moments("region", [], 4, DIMER, "h")

    def test_zero_terms_is_not_the_default(self):
        """A zero term count is rejected even where None selects a default."""
        fib = CFinite((0, 1), (1, 1))
        for call in (
            lambda: self.analyzer.frame_gf([1, 1, 1, 1], 0, self.config, DIMER),
            lambda: self.analyzer.cross_gf(1, 1, 0, self.config, DIMER),
            lambda: self.analyzer.frame_gf_bivariate([1, 1, 1, 1], 0, self.config, DIMER),
            lambda: self.analyzer.growth(fib, [], self.config, index=0),
            lambda: self.analyzer.growth(fib, [], self.config, precision=0),
        ):
            with self.subTest():
                with self.assertRaises(UsageError):
                    call()

    def test_growth(self):
        """Growth from a coding, or from terms that admit a guess."""
        result = self.analyzer.growth(CFinite((0, 1), (1, 1)), [], self.config)
        self.assertTrue(result.value.value.startswith("1.618033988"))
        with self.assertRaises(GuessError):
            self.analyzer.growth(None, [1, 2, 3], self.config)

    def test_default_gf_terms(self):
        """Enough terms for the largest accepted order."""
        self.assertEqual(TilingAnalyzer.default_gf_terms(GuessConfig(10, 5)), 25)


if __name__ == '__main__':
    unittest.main()
