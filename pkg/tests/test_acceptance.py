#!/usr/bin/env python3
"""
Acceptance tests: published closed forms for frames, crosses and
monomer-dimer tilings, recovered from the transfer-matrix engines.

Generating functions are compared after normalization, so the form in
which a closed formula is written does not matter.
"""

import unittest

import pytest

from skinny_tilings.frames import cross_seq, frame_seq, frame_table
from skinny_tilings.polynomials import MultiPoly, UniPoly, rf_normalize, rf_series
from skinny_tilings.recurrences import (
    cfinite_equal,
    ciucu_classify,
    guess_bivariate_gf,
    guess_cfinite,
    guess_rational_gf,
    knuth_formula_cfinite,
)
from skinny_tilings.types import CiucuClass, GuessConfig, TilingMode

MD = TilingMode.MONOMER_DIMER

KNUTH_TERMS = [
    36, 196, 1444, 9604, 66564, 454276, 3118756, 21362884, 146458404,
    1003749124, 6880038916, 47155859716, 323212716324, 2215328606404,
    15184099435684, 104073336269956,
]

QUARTIC_PAIR = UniPoly([1, -4, 1]) * UniPoly([1, 0, -4, 0, 1])


def product(*factors):
    return UniPoly.product([UniPoly(f) for f in factors])


def squares_of(rf, last, factor=1):
    return [factor * b * b for b in rf_series(rf, last)]


class TestSquareFrames(unittest.TestCase):
    """Frames whose hole is an n x n square."""

    def test_thickness_two(self):
        """4 (2 F(n+2)^2 + (-1)^n)^2, a recurrence of order 5."""
        terms = frame_seq(2, 2, 2, 2, 15)
        self.assertEqual(terms, KNUTH_TERMS)
        guessed = guess_cfinite(terms)
        self.assertEqual(guessed.order, 5)
        self.assertTrue(cfinite_equal(guessed, knuth_formula_cfinite()))

    def test_unequal_thicknesses(self):
        """Bottom 1, top 3, left 3, right 1."""
        expected = rf_normalize(UniPoly([36, -32, -116, 40, 28, -8]), QUARTIC_PAIR)
        self.assertEqual(guess_rational_gf(frame_seq(1, 3, 3, 1, 29)), expected)

    def test_thickness_three(self):
        """Twice a square, with B(0) = 58."""
        b = rf_normalize(
            UniPoly([-2 * c for c in (-29, 19, 102, -32, -25, 7)]), QUARTIC_PAIR
        )
        terms = frame_seq(3, 3, 3, 3, 20)
        self.assertEqual(terms[0], 6728)
        self.assertEqual(terms, squares_of(b, 20, 2))
        self.assertTrue(all(ciucu_classify(x) is CiucuClass.TWICE_SQUARE for x in terms))

    def test_thickness_four(self):
        """A perfect square, with C(0) = 3604."""
        numerator = [
            901, 2517, -17574, -46322, 112903, 291045, -269376, -741508, 215233,
            786069, -21836, -352896, -24137, 67487, 5874, -5056, -359, 97,
        ]
        denominator = product(
            [-1, 1], [1, 1], [1, 1, -5, 1, 1], [1, -11, 25, -11, 1], [1, 7, 13, 7, 1], [1, -1, -5, -1, 1]
        )
        c = rf_normalize(UniPoly([-4 * x for x in numerator]), denominator)
        terms = frame_seq(4, 4, 4, 4, 12)
        self.assertEqual(terms[0], 12988816)
        self.assertEqual(terms, squares_of(c, 12))
        self.assertTrue(all(ciucu_classify(x) is CiucuClass.SQUARE for x in terms))


class TestSquareClassification(unittest.TestCase):
    """Counts of frames with a diagonal mirror line."""

    def test_square_frames_are_square_or_twice_square(self):
        """Frame(a, a, a, a) for a <= 3 and holes up to 15 x 15."""
        for a in (1, 2, 3):
            for n, value in enumerate(frame_seq(a, a, a, a, 15)):
                with self.subTest(a=a, n=n):
                    self.assertIsNot(ciucu_classify(value), CiucuClass.NEITHER)

    def test_axis_mirrors_alone_are_not_enough(self):
        """Frame(1, 1, 2, 2) is symmetric in both axes, yet its 2 x 4 solid case has 5 tilings."""
        terms = frame_seq(1, 1, 2, 2, 3)
        self.assertEqual(terms[0], 5)
        self.assertIs(ciucu_classify(terms[0]), CiucuClass.NEITHER)


class TestHoleTables(unittest.TestCase):
    """Frames with an m x n hole."""

    def test_bivariate_thickness_two(self):
        """P(x, y) / Q(x, y) for the thickness-2 frame."""
        p = {
            (3, 3): 4, (3, 2): -7, (2, 3): -7, (3, 1): -14, (2, 2): 10, (1, 3): -14,
            (3, 0): 13, (2, 1): 35, (1, 2): 35, (0, 3): 13, (2, 0): -30, (1, 1): 10,
            (0, 2): -30, (1, 0): -23, (0, 1): -23, (0, 0): 36,
        }
        q = product([-1, 1], [1, 1], [1, -3, 1])
        gf = guess_bivariate_gf(frame_table(2, 2, 2, 2, 14, 14))
        self.assertIsNotNone(gf)
        self.assertEqual(gf.numerator, MultiPoly(("x", "y"), p))
        self.assertEqual(gf.q1, q.scale(-1).with_var("x"))
        self.assertEqual(gf.q2, q.scale(-1).with_var("y"))
        self.assertEqual(gf.table(1, 0)[(1, 0)], 85)


class TestCrosses(unittest.TestCase):
    """Crosses with four arms of length n."""

    def test_square_centre_two(self):
        """2 B2(n)^2 with B2 = 1 / ((t + 1) (t^2 - 3t + 1))."""
        b2 = rf_normalize(UniPoly([1]), product([1, 1], [1, -3, 1]))
        self.assertEqual(rf_series(b2, 4), [1, 2, 6, 15, 40])
        self.assertEqual(cross_seq(2, 2, 20), squares_of(b2, 20, 2))

    def test_square_centre_four(self):
        """B4(n)^2, with B4(0) = 6."""
        b4 = rf_normalize(
            UniPoly([-2 * c for c in (3, -1, -5, 13, -11, -2, 2)]),
            product([-1, 1], [1, -11, 25, -11, 1], [1, 7, 13, 7, 1]),
        )
        self.assertEqual(cross_seq(4, 4, 20), squares_of(b4, 20))


class TestMonomerDimer(unittest.TestCase):
    """Monomer-dimer tilings of the thickness-2 frame."""

    def test_leading_terms(self):
        """The solid 4 x 4 square has 10012 monomer-dimer tilings."""
        self.assertEqual(frame_seq(2, 2, 2, 2, 0, MD), [10012])

    @pytest.mark.slow
    def test_generating_function(self):
        """An order-31 generating function, checked on and guessed from 80 terms."""
        numerator = [
            -10012, -226706, 6962033, 73176689, -1679236205, 657867045, 67451928324,
            -87120095554, -944330286322, 1059903067708, 5123918478955, -4837640809485,
            -11693567793807, 9751493606823, 11643454084810, -9040256915004,
            -4977782472712, 3924729557742, 823823428983, -796609853769, -29007687275,
            74767156291, -3505671568, -3200500450, 266911158, 61186056, -5787443,
            -494267, 43975, 1361, -94,
        ]
        denominator = product(
            [-1, 1],
            [-1, 11, -7, 1],
            [-1, -33, 7, 1],
            [-1, 7, -11, 1],
            [-1, -3, 1, 1],
            [-1, 107, -27, 1],
            [-1, -1, 3, 1],
            [1, 8, -337, -304, 55, 20, 1],
            [1, 0, -37, -76, -37, 0, 1],
        )
        self.assertEqual(denominator.degree, 31)
        expected = rf_normalize(UniPoly(numerator), denominator)
        terms = frame_seq(2, 2, 2, 2, 79, MD)
        self.assertEqual(len(terms), 80)
        self.assertEqual(terms, rf_series(expected, 79))
        guessed = guess_rational_gf(terms, GuessConfig(max_order=40, margin=5))
        self.assertEqual(guessed, expected)


if __name__ == '__main__':
    unittest.main()
