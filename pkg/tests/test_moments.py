#!/usr/bin/env python3
"""
Test module for tile-count moments and growth ratios.
"""

import itertools
import unittest
from fractions import Fraction

from skinny_tilings.enumerators import count_weighted
from skinny_tilings.exceptions import SequenceError
from skinny_tilings.frames import frame_seq_weighted
from skinny_tilings.moments import factorial_moments, growth_rate, moment_record, weighted_moments
from skinny_tilings.polynomials import MultiPoly, UniPoly
from skinny_tilings.recurrences import CFinite, knuth_formula_cfinite
from skinny_tilings.regions import build_frame
from skinny_tilings.transfers import seq_rect_weighted
from skinny_tilings.types import FrameSpec

FIBONACCI = CFinite((0, 1), (1, 1))


def horizontal_tally(n: int) -> dict:
    """Number of 2 x n domino tilings by horizontal-domino count, by brute force."""
    tally: dict = {}
    for parts in range(n + 1):
        for blocks in itertools.product((1, 2), repeat=parts):
            if sum(blocks) != n:
                continue
            horizontals = 2 * blocks.count(2)
            tally[horizontals] = tally.get(horizontals, 0) + 1
    return tally


def central_moment(tally: dict, k: int) -> Fraction:
    total = sum(tally.values())
    mean = Fraction(sum(x * c for x, c in tally.items()), total)
    return sum((Fraction(x) - mean) ** k * c for x, c in tally.items()) / total


class TestMomentRecord(unittest.TestCase):
    """Test cases for moments of a single enumerator."""

    def test_two_point_distribution(self):
        """1 + h^2: zero or two tiles with equal probability."""
        record = moment_record(0, UniPoly([1, 0, 1], "h"))
        self.assertEqual(record.total, 2)
        self.assertEqual(record.mean, 1)
        self.assertEqual(record.variance, 1)
        self.assertEqual(record.third_central, 0)
        self.assertEqual(record.fourth_central, 1)
        self.assertEqual(record.skewness_squared, 0)
        self.assertEqual(record.kurtosis, 1)

    def test_factorial_moments(self):
        """E[X] and E[X(X-1)] from derivatives at 1."""
        self.assertEqual(factorial_moments(UniPoly([1, 2, 1], "h"), 2), [1, Fraction(1, 2)])

    def test_degenerate_distribution(self):
        """A constant tile count has no shape measures."""
        record = moment_record(3, UniPoly([0, 0, 3], "h"))
        self.assertEqual(record.index, 3)
        self.assertEqual(record.mean, 2)
        self.assertEqual(record.variance, 0)
        self.assertIsNone(record.skewness_squared)
        self.assertIsNone(record.kurtosis)

    def test_lower_orders(self):
        """Only the requested moments are filled in."""
        record = moment_record(0, UniPoly([1, 0, 1], "h"), up_to=2)
        self.assertEqual(record.variance, 1)
        self.assertIsNone(record.third_central)
        self.assertIsNone(record.fourth_central)

    def test_scaling_invariance(self):
        """Multiplying an enumerator by a constant changes only the total."""
        once = moment_record(0, UniPoly([1, 0, 1], "h"))
        thrice = moment_record(0, UniPoly([3, 0, 3], "h"))
        self.assertEqual(thrice.total, 6)
        for field in ("mean", "variance", "kurtosis"):
            self.assertEqual(getattr(thrice, field), getattr(once, field))
        single = moment_record(0, UniPoly([0, 1], "h"))
        self.assertEqual((single.mean, single.variance), (1, 0))

    def test_invalid_enumerators(self):
        """Zero and negative enumerators have no distribution."""
        with self.assertRaises(SequenceError):
            moment_record(0, UniPoly([], "h"))
        with self.assertRaises(SequenceError):
            moment_record(0, UniPoly([1, -1, 1], "h"))


class TestWeightedMoments(unittest.TestCase):
    """Test cases for moment reports over families."""

    def test_matches_brute_force(self):
        """2 x n rectangles against a direct tally of horizontal dominoes."""
        report = weighted_moments(seq_rect_weighted(2, 8), "h")
        self.assertEqual(report.variable, "h")
        self.assertEqual(len(report.records), 9)
        for record in report.records[1:]:
            tally = horizontal_tally(record.index)
            with self.subTest(n=record.index):
                self.assertEqual(record.total, sum(tally.values()))
                self.assertEqual(
                    record.mean,
                    Fraction(sum(x * c for x, c in tally.items()), sum(tally.values())),
                )
                self.assertEqual(record.variance, central_moment(tally, 2))
                self.assertEqual(record.third_central, central_moment(tally, 3))
                self.assertEqual(record.fourth_central, central_moment(tally, 4))

    def test_frames_match_direct_enumeration(self):
        """Frame enumerators from the trace formula and from the profile DP agree."""
        report = weighted_moments(frame_seq_weighted(2, 2, 2, 2, 2), "h")
        for n, record in enumerate(report.records):
            region = build_frame(FrameSpec(2, 2, 2, 2, n, n))
            direct = moment_record(n, count_weighted(region).restrict("h"))
            with self.subTest(n=n):
                self.assertEqual(record, direct)

    def test_cell_count_identity(self):
        """Every domino covers two cells, so 2 (E[h] + E[v]) is the area."""
        polys = frame_seq_weighted(1, 3, 3, 1, 3)
        horizontal = weighted_moments(polys, "h", up_to=1)
        vertical = weighted_moments(polys, "v", up_to=1)
        self.assertEqual(len(horizontal.records), 4)
        for n, (h, v) in enumerate(zip(horizontal.records, vertical.records)):
            with self.subTest(n=n):
                self.assertEqual(2 * (h.mean + v.mean), FrameSpec(1, 3, 3, 1, n, n).cell_count)

    def test_unknown_variable(self):
        """The variable must belong to the enumerators."""
        poly = MultiPoly.variable("h", ("h", "v"))
        with self.assertRaises(ValueError):
            weighted_moments([poly], "m")

    def test_order_range(self):
        """Moments are reported up to order 4."""
        poly = MultiPoly.variable("h", ("h", "v"))
        with self.assertRaises(ValueError):
            weighted_moments([poly], "h", up_to=5)


class TestGrowthRate(unittest.TestCase):
    """Test cases for growth_rate."""

    def test_golden_ratio(self):
        """Fibonacci grows like the golden ratio."""
        estimate = growth_rate(FIBONACCI)
        self.assertTrue(estimate.value.startswith("1.6180339887498"))
        self.assertLess(float(estimate.error), 1e-15)
        self.assertEqual(estimate.index, 40)

    def test_constant_and_knuth(self):
        """Constant sequences have ratio 1; thickness-2 frames grow like phi^4."""
        self.assertEqual(growth_rate(CFinite((3,), (1,))).value, "1.0")
        self.assertTrue(growth_rate(knuth_formula_cfinite()).value.startswith("6.8541019662"))

    def test_data_must_match(self):
        """Terms that disagree with the recurrence are rejected."""
        with self.assertRaises(SequenceError):
            growth_rate(FIBONACCI, [0, 1, 2])

    def test_sign_changes(self):
        """Alternating sequences have no growth ratio."""
        with self.assertRaises(SequenceError):
            growth_rate(CFinite((1,), (-1,)), index=10)
        with self.assertRaises(ValueError):
            growth_rate(FIBONACCI, index=0)


if __name__ == '__main__':
    unittest.main()
