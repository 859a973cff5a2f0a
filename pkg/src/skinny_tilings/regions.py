"""
Plane regions made of unit cells.

A Region is a finite set of integer cells, with x growing rightward
(columns) and y growing upward (rows). It may also carry cuts: pairs of
adjacent cells that no domino may cover together. Frames whose hole has
exactly one zero dimension use a cut to model the slit the hole leaves.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, NamedTuple, Optional, Tuple

from .exceptions import DuplicateCellError
from .types import CrossSpec, FrameSpec


class Cell(NamedTuple):
    """A unit cell: column x, row y."""
    x: int
    y: int


Cut = Tuple[Cell, Cell]


def make_cut(first: Tuple[int, int], second: Tuple[int, int]) -> Cut:
    """Normalize an adjacent cell pair into a cut (smaller cell first)."""
    a, b = Cell(*first), Cell(*second)
    if abs(a.x - b.x) + abs(a.y - b.y) != 1:
        raise ValueError(f"Cut cells {tuple(a)} and {tuple(b)} are not adjacent")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Region:
    """A finite set of cells, optionally with cuts between adjacent cells."""
    cells: FrozenSet[Cell]
    cuts: FrozenSet[Cut] = field(default_factory=frozenset)

    @classmethod
    def from_cells(
        cls,
        cells: Iterable[Tuple[int, int]],
        cuts: Iterable[Tuple[Tuple[int, int], Tuple[int, int]]] = (),
    ) -> "Region":
        """
        Build a region, rejecting duplicate cells.

        Raises:
            DuplicateCellError: If a cell is listed twice
        """
        seen = set()
        for raw in cells:
            cell = Cell(*raw)
            if cell in seen:
                raise DuplicateCellError(tuple(cell))
            seen.add(cell)
        return cls(frozenset(seen), frozenset(make_cut(a, b) for a, b in cuts))

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell: object) -> bool:
        return cell in self.cells

    @property
    def cell_count(self) -> int:
        return len(self.cells)

    def is_empty(self) -> bool:
        return not self.cells

    def can_join(self, first: Cell, second: Cell) -> bool:
        """True if a domino may cover both cells."""
        if first not in self.cells or second not in self.cells:
            return False
        return make_cut(first, second) not in self.cuts

    def bounding_box(self) -> Optional[Tuple[int, int, int, int]]:
        """(min_x, min_y, max_x, max_y), or None for the empty region."""
        if not self.cells:
            return None
        xs = [c.x for c in self.cells]
        ys = [c.y for c in self.cells]
        return min(xs), min(ys), max(xs), max(ys)

    def _mapped(self, func) -> "Region":
        return Region(
            frozenset(Cell(*func(c)) for c in self.cells),
            frozenset(make_cut(func(a), func(b)) for a, b in self.cuts),
        )

    def translate(self, dx: int, dy: int) -> "Region":
        return self._mapped(lambda c: (c.x + dx, c.y + dy))

    def rotate90(self) -> "Region":
        """Quarter turn counter-clockwise about the origin."""
        return self._mapped(lambda c: (-c.y, c.x))

    def reflect(self) -> "Region":
        """Mirror image in the vertical axis."""
        return self._mapped(lambda c: (-c.x, c.y))

    def transpose(self) -> "Region":
        """Mirror image in the diagonal; swaps horizontal and vertical tiles."""
        return self._mapped(lambda c: (c.y, c.x))

    def canonicalize(self) -> "Region":
        """Translate so that min x = min y = 0."""
        box = self.bounding_box()
        if box is None:
            return self
        return self.translate(-box[0], -box[1])

    def sorted_cells(self) -> Tuple[Cell, ...]:
        """Cells in column-major order: left-most column first, bottom to top."""
        return tuple(sorted(self.cells))

    def without(self, cells: Iterable[Tuple[int, int]]) -> "Region":
        removed = {Cell(*c) for c in cells}
        kept = self.cells - removed
        cuts = frozenset(cut for cut in self.cuts if cut[0] in kept and cut[1] in kept)
        return Region(frozenset(kept), cuts)


def build_rectangle(m: int, n: int) -> Region:
    """
    The m x n rectangle: m rows (height) and n columns (width).

    Args:
        m: Height
        n: Width

    Returns:
        Cells {(x, y) : 0 <= x < n, 0 <= y < m}
    """
    if m < 0 or n < 0:
        raise ValueError("Rectangle dimensions cannot be negative")
    return Region(frozenset(Cell(x, y) for x in range(n) for y in range(m)))


def build_frame(spec: FrameSpec) -> Region:
    """
    The frame region: the outer rectangle minus the m x n hole.

    The hole's lower-left cell is (b1, a1). A hole with exactly one zero
    dimension removes no cells but leaves a slit that dominoes cannot cross:
    between columns b1-1 and b1 over rows a1..a1+m-1 when n = 0, and between
    rows a1-1 and a1 over columns b1..b1+n-1 when m = 0.
    """
    height, width = spec.outer_height, spec.outer_width
    hole_x = range(spec.b1, spec.b1 + spec.n)
    hole_y = range(spec.a1, spec.a1 + spec.m)
    cells = frozenset(
        Cell(x, y)
        for x in range(width)
        for y in range(height)
        if not (x in hole_x and y in hole_y)
    )
    cuts = []
    if spec.n == 0 and spec.m > 0:
        cuts = [make_cut((spec.b1 - 1, y), (spec.b1, y)) for y in hole_y]
    elif spec.m == 0 and spec.n > 0:
        cuts = [make_cut((x, spec.a1 - 1), (x, spec.a1)) for x in hole_x]
    return Region(cells, frozenset(cuts))


def build_cross(spec: CrossSpec) -> Region:
    """
    The cross: an a-wide, b-tall centre block with four arms of length n.

    The horizontal arms have height b, the vertical arms width a. The centre
    occupies columns n..n+a-1 and rows n..n+b-1.
    """
    a, b, n = spec.a, spec.b, spec.n
    cells = set()
    for x in range(n, n + a):
        for y in range(0, 2 * n + b):
            cells.add(Cell(x, y))
    for y in range(n, n + b):
        for x in range(0, 2 * n + a):
            cells.add(Cell(x, y))
    return Region(frozenset(cells))
