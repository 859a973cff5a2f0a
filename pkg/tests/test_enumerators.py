#!/usr/bin/env python3
"""
Test module for direct enumeration of tilings.

The enumerator is the ground truth for every other engine, so it is
checked against well-known counts and against structural properties:
symmetry invariance, odd-area vanishing and weighted/plain agreement.
"""

import random
import unittest

from skinny_tilings.enumerators import (
    Exit,
    TilingEnumerator,
    count_tilings,
    count_weighted,
    strip_entry,
)
from skinny_tilings.polynomials import MultiPoly
from skinny_tilings.regions import Cell, Region, build_rectangle
from skinny_tilings.types import Side, TilingMode

DIMER = TilingMode.DIMER
MD = TilingMode.MONOMER_DIMER


def random_region(rng: random.Random, size: int = 4, density: float = 0.7) -> Region:
    cells = [(x, y) for x in range(size) for y in range(size) if rng.random() < density]
    return Region.from_cells(cells)


class TestCountTilings(unittest.TestCase):
    """Test cases for plain counts."""

    def test_rectangles(self):
        """Known domino counts of small rectangles."""
        expected = {(2, 2): 2, (2, 3): 3, (3, 4): 11, (4, 4): 36, (3, 3): 0, (6, 6): 6728}
        for (m, n), count in expected.items():
            with self.subTest(m=m, n=n):
                self.assertEqual(count_tilings(build_rectangle(m, n)), count)

    def test_monomer_dimer_rectangles(self):
        """Known monomer-dimer counts (all matchings of the grid graph)."""
        expected = {(1, 3): 3, (2, 2): 7, (2, 3): 22, (3, 3): 131, (4, 4): 10012}
        for (m, n), count in expected.items():
            with self.subTest(m=m, n=n):
                self.assertEqual(count_tilings(build_rectangle(m, n), MD), count)

    def test_degenerate_regions(self):
        """The empty region has one tiling; a single cell has none without monomers."""
        empty = Region(frozenset())
        single = Region.from_cells([(0, 0)])
        self.assertEqual(count_tilings(empty), 1)
        self.assertEqual(count_tilings(single), 0)
        self.assertEqual(count_tilings(single, MD), 1)

    def test_cut_blocks_domino(self):
        """A cut removes the tilings that use the cut pair."""
        region = Region.from_cells(build_rectangle(2, 2).cells, cuts=[((0, 0), (1, 0))])
        self.assertEqual(count_tilings(region), 1)
        self.assertEqual(count_tilings(region, MD), 5)

    def test_odd_area_has_no_domino_tiling(self):
        """Regions with an odd number of cells have no domino tilings."""
        rng = random.Random(5)
        checked = 0
        while checked < 100:
            region = random_region(rng)
            if region.cell_count % 2 == 0:
                continue
            with self.subTest(cells=sorted(region.cells)):
                self.assertEqual(count_tilings(region), 0)
            checked += 1

    def test_symmetry_invariance(self):
        """Counts do not change under rotations, reflections and translations."""
        rng = random.Random(9)
        for _ in range(100):
            region = random_region(rng)
            mode = rng.choice([DIMER, MD])
            count = count_tilings(region, mode)
            with self.subTest(cells=sorted(region.cells), mode=mode):
                self.assertEqual(count_tilings(region.rotate90(), mode), count)
                self.assertEqual(count_tilings(region.reflect(), mode), count)
                self.assertEqual(count_tilings(region.translate(3, -2), mode), count)


class TestCountWeighted(unittest.TestCase):
    """Test cases for weight enumerators."""

    def setUp(self):
        """Set up test fixtures."""
        self.hv = ("h", "v")
        self.hvm = ("h", "v", "m")

    def test_square(self):
        """The 2x2 square: two horizontal or two vertical dominoes."""
        h = MultiPoly.variable("h", self.hv)
        v = MultiPoly.variable("v", self.hv)
        self.assertEqual(count_weighted(build_rectangle(2, 2)), h * h + v * v)

    def test_square_with_monomers(self):
        """The 2x2 square with monomers allowed."""
        h = MultiPoly.variable("h", self.hvm)
        v = MultiPoly.variable("v", self.hvm)
        m = MultiPoly.variable("m", self.hvm)
        expected = m ** 4 + 2 * h * m * m + 2 * v * m * m + h * h + v * v
        self.assertEqual(count_weighted(build_rectangle(2, 2), MD), expected)

    def test_no_tilings_is_zero_polynomial(self):
        """An untileable region has the zero enumerator."""
        result = count_weighted(build_rectangle(3, 3))
        self.assertIsInstance(result, MultiPoly)
        self.assertTrue(result.is_zero())

    def test_weighted_at_ones_matches_count(self):
        """Setting every weight to 1 recovers the plain count."""
        rng = random.Random(13)
        for _ in range(100):
            region = random_region(rng)
            mode = rng.choice([DIMER, MD])
            with self.subTest(cells=sorted(region.cells), mode=mode):
                self.assertEqual(
                    count_weighted(region, mode).at_ones(), count_tilings(region, mode)
                )

    def test_transpose_swaps_weights(self):
        """Transposing a region exchanges horizontal and vertical tiles."""
        rng = random.Random(17)
        for _ in range(30):
            region = random_region(rng)
            with self.subTest(cells=sorted(region.cells)):
                self.assertEqual(
                    count_weighted(region.transpose()), count_weighted(region).swap("h", "v")
                )


class TestProfiles(unittest.TestCase):
    """Test cases for tilings with protruding dominoes."""

    def test_single_cell_exit(self):
        """A lone cell must leave through its exit unless monomers are allowed."""
        region = Region.from_cells([(0, 0)])
        exits = {Cell(0, 0): [Exit(Side.RIGHT, 0)]}
        self.assertEqual(TilingEnumerator(DIMER).profiles(region, exits), {1: 1})
        self.assertEqual(TilingEnumerator(MD).profiles(region, exits), {0: 1, 1: 1})

    def test_exit_weights(self):
        """Exits carry the weight of the domino they start unless told otherwise."""
        region = Region.from_cells([(0, 0)])
        enumerator = TilingEnumerator(DIMER, weighted=True)
        up = enumerator.profiles(region, {Cell(0, 0): [Exit(Side.UP, 0)]})
        silent = enumerator.profiles(region, {Cell(0, 0): [Exit(Side.UP, 0, weighted=False)]})
        self.assertEqual(up[1], MultiPoly.variable("v", ("h", "v")))
        self.assertEqual(silent[1], 1)

    def test_exit_into_region_rejected(self):
        """An exit must lead outside the region."""
        region = build_rectangle(1, 2)
        with self.assertRaises(ValueError):
            TilingEnumerator().profiles(region, {Cell(0, 0): [Exit(Side.RIGHT, 0)]})
        with self.assertRaises(ValueError):
            TilingEnumerator().profiles(region, {Cell(5, 5): [Exit(Side.RIGHT, 0)]})

    def test_strip_entries(self):
        """Clipped-strip counts for a single column of height 2."""
        self.assertEqual(strip_entry(2, 1, 3, 3), 1)
        self.assertEqual(strip_entry(2, 1, 3, 0), 1)
        self.assertEqual(strip_entry(2, 1, 1, 2), 1)
        self.assertEqual(strip_entry(2, 1, 1, 3), 0)
        self.assertEqual(strip_entry(2, 0, 2, 2), 1)
        self.assertEqual(strip_entry(2, 0, 2, 1), 0)


if __name__ == '__main__':
    unittest.main()
