"""
Direct dynamic-programming enumeration of tilings.

This is the ground truth for every other engine. The uncovered part of a
region is a bitmask over its cells in column-major order, so the lowest set
bit is always the left-most bottom-most uncovered cell. That pivot is
covered by a rightward domino, an upward domino, a monomer (when allowed)
or, for boundary cells given exit slots, a domino protruding out of the
region. Results are memoized on the mask.
"""

import logging
from typing import Any, Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from .polynomials import MultiPoly
from .regions import Cell, Region, build_rectangle
from .types import Side, TilingMode

logger = logging.getLogger(__name__)


class Exit(NamedTuple):
    """A way for a domino to leave the region from a boundary cell."""
    side: Side
    slot: int
    weighted: bool = True


ProfileTable = Dict[int, Any]

_NEIGHBOUR_OFFSETS = {
    Side.UP: (0, 1),
    Side.LEFT: (-1, 0),
    Side.DOWN: (0, -1),
    Side.RIGHT: (1, 0),
}


class TilingEnumerator:
    """
    Counts (or weight-enumerates) tilings of arbitrary regions.

    This class is responsible for:
    - Indexing a region's cells and their right/up neighbours
    - Running the memoized pivot-cell recurrence without recursion
    - Tracking protrusion profiles through exit slots
    - Producing plain counts or h/v/m weight enumerators
    """

    def __init__(self, mode: TilingMode = TilingMode.DIMER, weighted: bool = False):
        """
        Initialize the enumerator.

        Args:
            mode: Which tiles are allowed
            weighted: Produce weight enumerators instead of counts
        """
        self.mode = mode
        self.weighted = weighted
        self.logger = logging.getLogger(__name__)
        if weighted:
            variables = mode.weight_variables
            self.one: Any = MultiPoly.constant(1, variables)
            self.h: Any = MultiPoly.variable("h", variables)
            self.v: Any = MultiPoly.variable("v", variables)
            self.m: Any = MultiPoly.variable("m", variables) if mode.allows_monomers else None
        else:
            self.one = 1
            self.h = self.v = self.m = 1

    def count(self, region: Region) -> Any:
        """Number of tilings, or the weight enumerator when weighted."""
        return self.profiles(region).get(0, self._zero())

    def profiles(
        self, region: Region, exits: Optional[Mapping[Cell, Sequence[Exit]]] = None
    ) -> ProfileTable:
        """
        Tilings grouped by protrusion profile.

        Args:
            region: The region to tile
            exits: For boundary cells, the ways a domino may leave the region;
                each used exit sets bit ``slot`` of the profile

        Returns:
            Mapping from profile bitmask to count (or weight enumerator);
            profiles with no tilings are absent
        """
        cells = region.sorted_cells()
        index = {cell: i for i, cell in enumerate(cells)}
        right = [self._neighbour(region, index, c, Side.RIGHT) for c in cells]
        up = [self._neighbour(region, index, c, Side.UP) for c in cells]
        moves: List[List[Tuple[Any, int]]] = [[] for _ in cells]
        for cell, cell_exits in (exits or {}).items():
            if cell not in index:
                raise ValueError(f"Exit given for cell {tuple(cell)} outside the region")
            for exit_ in cell_exits:
                target = Cell(cell.x + _NEIGHBOUR_OFFSETS[exit_.side][0],
                              cell.y + _NEIGHBOUR_OFFSETS[exit_.side][1])
                if target in index:
                    raise ValueError(f"Exit from {tuple(cell)} leads into the region")
                weight = self._exit_weight(exit_)
                moves[index[cell]].append((weight, 1 << exit_.slot))

        full = (1 << len(cells)) - 1
        table = self._solve(full, right, up, moves)
        self.logger.debug(
            f"Enumerated {len(cells)} cells in {self.mode.value} mode: {len(table)} profiles"
        )
        return table

    def _zero(self) -> Any:
        return 0

    def _exit_weight(self, exit_: Exit) -> Any:
        if not exit_.weighted:
            return self.one
        return self.h if exit_.side in (Side.LEFT, Side.RIGHT) else self.v

    @staticmethod
    def _neighbour(region: Region, index: Dict[Cell, int], cell: Cell, side: Side) -> int:
        dx, dy = _NEIGHBOUR_OFFSETS[side]
        other = Cell(cell.x + dx, cell.y + dy)
        if other in index and region.can_join(cell, other):
            return index[other]
        return -1

    def _branches(
        self,
        mask: int,
        right: List[int],
        up: List[int],
        moves: List[List[Tuple[Any, int]]],
    ) -> List[Tuple[int, Any, int]]:
        low = mask & -mask
        pivot = low.bit_length() - 1
        rest = mask ^ low
        out = []
        r = right[pivot]
        if r >= 0 and (rest >> r) & 1:
            out.append((rest ^ (1 << r), self.h, 0))
        u = up[pivot]
        if u >= 0 and (rest >> u) & 1:
            out.append((rest ^ (1 << u), self.v, 0))
        if self.mode.allows_monomers:
            out.append((rest, self.m, 0))
        for weight, bit in moves[pivot]:
            out.append((rest, weight, bit))
        return out

    def _solve(
        self,
        full: int,
        right: List[int],
        up: List[int],
        moves: List[List[Tuple[Any, int]]],
    ) -> ProfileTable:
        memo: Dict[int, ProfileTable] = {0: {0: self.one}}
        stack = [full]
        while stack:
            mask = stack[-1]
            if mask in memo:
                stack.pop()
                continue
            branches = self._branches(mask, right, up, moves)
            pending = [child for child, _, _ in branches if child not in memo]
            if pending:
                stack.extend(pending)
                continue
            stack.pop()
            table: ProfileTable = {}
            for child, weight, bit in branches:
                for profile, value in memo[child].items():
                    key = profile | bit
                    term = value if weight is self.one else value * weight
                    table[key] = table[key] + term if key in table else term
            memo[mask] = table
        return memo[full]


def count_tilings(region: Region, mode: TilingMode = TilingMode.DIMER) -> int:
    """
    Exact number of tilings of a region.

    Dimer mode uses dominoes only and must cover every cell; monomer-dimer
    mode also allows 1x1 tiles.
    """
    return TilingEnumerator(mode).count(region)


def count_weighted(region: Region, mode: TilingMode = TilingMode.DIMER) -> MultiPoly:
    """Sum over all tilings of h^#horizontal v^#vertical (m^#monomers)."""
    result = TilingEnumerator(mode, weighted=True).count(region)
    if isinstance(result, MultiPoly):
        return result
    return MultiPoly.constant(result, mode.weight_variables)


def strip_entry(m: int, n: int, i: int, j: int, mode: TilingMode = TilingMode.DIMER) -> int:
    """
    Tilings of the m x n rectangle whose first column has only the cells of
    state i available and whose last column's protrusions leave state j
    available in column n+1. This is entry (i, j) of TM(m)^n.
    """
    full = (1 << m) - 1
    if n == 0:
        return 1 if i == j else 0
    region = build_rectangle(m, n).without(
        (0, y) for y in range(m) if not (i >> y) & 1
    )
    exits = {
        Cell(n - 1, y): [Exit(Side.RIGHT, y)]
        for y in range(m)
        if Cell(n - 1, y) in region
    }
    table = TilingEnumerator(mode).profiles(region, exits)
    return table.get(full ^ j, 0)
