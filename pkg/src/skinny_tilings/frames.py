"""
Frame and cross engines.

A frame splits into four corner rectangles joined by four strips. Walking
counter-clockwise from the south-west corner, every domino that crosses
from a corner into a strip is a stick-out of that corner, and every strip
is a power of the transfer matrix of its width. The frame count is then
the trace of the cyclic product

    C_SW . TM(a1)^n . C_SE . TM(b2)^m . C_NE . TM(a2)^n . C_NW . TM(b1)^m

where each C is a corner matrix re-indexed by availability states. A
cross is a central block with stick-outs on all four sides, each side
feeding an arm counted by an entry of a transfer-matrix power.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Tuple

from .enumerators import Exit, TilingEnumerator
from .exceptions import SideError, WidthCapError
from .matrices import RingMatrix, mat_pow
from .polynomials import MultiPoly
from .regions import Cell, build_rectangle
from .transfers import DEFAULT_WIDTH_CAP, TransferMatrix, build_tm, power_sequence
from .types import CrossSpec, FrameSpec, Side, Table, Terms, TilingMode

logger = logging.getLogger(__name__)


def side_cells(side: Side, height: int, width: int) -> List[Cell]:
    """
    Boundary cells of a height x width rectangle along one side.

    Cells are ordered by increasing x on the Up and Down sides and by
    increasing y on the Left and Right sides; the position in this list
    is the cell's bit in a stick-out state.
    """
    if side is Side.UP:
        return [Cell(x, height - 1) for x in range(width)]
    if side is Side.DOWN:
        return [Cell(x, 0) for x in range(width)]
    if side is Side.LEFT:
        return [Cell(0, y) for y in range(height)]
    return [Cell(width - 1, y) for y in range(height)]


def _ring(mode: TilingMode, weighted: bool) -> Tuple[Any, Any]:
    if weighted:
        variables = mode.weight_variables
        return MultiPoly(variables), MultiPoly.constant(1, variables)
    return 0, 1


@dataclass(frozen=True)
class CornerTransfer:
    """
    RTM(a, b, s1, s2): tilings of an a x b corner with stick-outs through s1 and s2.

    Row i collects the tilings whose stick-outs through s1 form state i,
    column j those whose stick-outs through s2 form state j.
    """
    matrix: RingMatrix
    height: int
    width: int
    s1: Side
    s2: Side
    mode: TilingMode
    weighted: bool

    def availability_form(self) -> RingMatrix:
        """Re-index rows and columns by the complementary (available) cells."""
        rows_full = self.matrix.n_rows - 1
        cols_full = self.matrix.n_cols - 1
        return self.matrix.permute(
            [rows_full ^ i for i in range(self.matrix.n_rows)],
            [cols_full ^ j for j in range(self.matrix.n_cols)],
        )


@lru_cache(maxsize=None)
def _cached_corner(
    a: int, b: int, s1: Side, s2: Side, mode: TilingMode, weighted: bool
) -> CornerTransfer:
    first = side_cells(s1, a, b)
    second = side_cells(s2, a, b)
    exits: Dict[Cell, List[Exit]] = {}
    for slot, cell in enumerate(first):
        # the strip fed through s1 already carries these tiles' weight
        exits.setdefault(cell, []).append(Exit(s1, slot, weighted=False))
    for slot, cell in enumerate(second):
        exits.setdefault(cell, []).append(Exit(s2, len(first) + slot))

    table = TilingEnumerator(mode, weighted).profiles(build_rectangle(a, b), exits)
    zero, one = _ring(mode, weighted)
    shift = len(first)
    matrix = RingMatrix.from_function(
        1 << len(first),
        1 << len(second),
        lambda i, j: table.get(i | (j << shift), zero),
        zero,
        one,
    )
    logger.debug(
        f"Built corner RTM({a},{b},{s1.name},{s2.name}) in {mode.value} mode "
        f"(weighted={weighted}): {len(table)} profiles"
    )
    return CornerTransfer(matrix, a, b, s1, s2, mode, weighted)


def corner_transfer(
    a: int,
    b: int,
    s1: Side,
    s2: Side,
    mode: TilingMode = TilingMode.DIMER,
    weighted: bool = False,
    width_cap: int = DEFAULT_WIDTH_CAP,
) -> CornerTransfer:
    """
    The corner stick-out matrix of the a x b rectangle (height a, width b).

    Tilings may protrude only through sides s1 and s2; the other two sides
    are flush. In weighted mode the stick-outs through s2 carry their tile
    weight and those through s1 do not.

    Raises:
        SideError: If s1 and s2 are the same side
        WidthCapError: If a side is longer than width_cap
    """
    if s1 is s2:
        raise SideError(f"Corner sides must differ, got {s1.name} twice")
    if a < 1 or b < 1:
        raise ValueError("Corner dimensions must be positive")
    if max(a, b) > width_cap:
        raise WidthCapError(max(a, b), width_cap)
    return _cached_corner(a, b, s1, s2, mode, weighted)


def _trace_of_product(left: RingMatrix, right: RingMatrix) -> Any:
    total = left.zero
    for i, row in enumerate(left.rows):
        for j, x in enumerate(row):
            if x != left.zero:
                y = right.rows[j][i]
                if y != left.zero:
                    total = total + x * y
    return total


class FrameEngine:
    """
    Transfer-matrix counter for frames and crosses.

    This class is responsible for:
    - Building the four corner matrices of a frame in availability form
    - Evaluating the trace formula for single holes, square-hole sequences and hole tables
    - Counting crosses through their central block and four arms
    - Producing plain counts or weight enumerators
    """

    def __init__(
        self,
        mode: TilingMode = TilingMode.DIMER,
        weighted: bool = False,
        width_cap: int = DEFAULT_WIDTH_CAP,
    ):
        """
        Initialize the engine.

        Args:
            mode: Which tiles are allowed
            weighted: Produce weight enumerators instead of counts
            width_cap: Largest strip width or corner side
        """
        self.mode = mode
        self.weighted = weighted
        self.width_cap = width_cap
        self.logger = logging.getLogger(__name__)

    def _tm(self, width: int, vertical: bool = False) -> TransferMatrix:
        tm = build_tm(width, self.mode, self.weighted, self.width_cap)
        return tm.with_swapped_weights() if vertical else tm

    def _corners(self, a1: int, a2: int, b1: int, b2: int) -> Tuple[RingMatrix, ...]:
        def corner(a: int, b: int, s1: Side, s2: Side) -> RingMatrix:
            return corner_transfer(
                a, b, s1, s2, self.mode, self.weighted, self.width_cap
            ).availability_form()

        return (
            corner(a1, b1, Side.UP, Side.RIGHT),
            corner(a1, b2, Side.LEFT, Side.UP),
            corner(a2, b2, Side.DOWN, Side.LEFT),
            corner(a2, b1, Side.RIGHT, Side.DOWN),
        )

    def frame_count(self, spec: FrameSpec) -> Any:
        """
        Count (or weight-enumerate) the tilings of one frame.

        Args:
            spec: The frame

        Returns:
            The exact count, or its weight enumerator
        """
        sw, se, ne, nw = self._corners(spec.a1, spec.a2, spec.b1, spec.b2)
        south = mat_pow(self._tm(spec.a1).matrix, spec.n)
        east = mat_pow(self._tm(spec.b2, vertical=True).matrix, spec.m)
        north = mat_pow(self._tm(spec.a2).matrix, spec.n)
        west = mat_pow(self._tm(spec.b1, vertical=True).matrix, spec.m)
        return _trace_of_product(sw @ south @ se @ east, ne @ north @ nw @ west)

    def frame_seq(self, a1: int, a2: int, b1: int, b2: int, count: int) -> List[Any]:
        """Frame counts with an n x n hole for n = 0..count."""
        if count < 0:
            raise ValueError("Term count cannot be negative")
        FrameSpec(a1, a2, b1, b2)
        sw, se, ne, nw = self._corners(a1, a2, b1, b2)
        south = power_sequence(self._tm(a1).matrix, count)
        east = power_sequence(self._tm(b2, vertical=True).matrix, count)
        north = south if a2 == a1 else power_sequence(self._tm(a2).matrix, count)
        west = east if b1 == b2 else power_sequence(self._tm(b1, vertical=True).matrix, count)
        terms = [
            _trace_of_product(sw @ south[n] @ se @ east[n], ne @ north[n] @ nw @ west[n])
            for n in range(count + 1)
        ]
        self.logger.info(
            f"Computed {len(terms)} terms of Frame({a1},{a2},{b1},{b2}) in {self.mode.value} mode"
        )
        return terms

    def frame_table(
        self, a1: int, a2: int, b1: int, b2: int, max_m: int, max_n: int
    ) -> Dict[Tuple[int, int], Any]:
        """
        Frame counts D(m, n) for every m x n hole with m <= max_m and n <= max_n.

        Returns:
            Mapping from (m, n) to the count
        """
        if max_m < 0 or max_n < 0:
            raise ValueError("Table bounds cannot be negative")
        FrameSpec(a1, a2, b1, b2)
        sw, se, ne, nw = self._corners(a1, a2, b1, b2)
        south = power_sequence(self._tm(a1).matrix, max_n)
        north = power_sequence(self._tm(a2).matrix, max_n)
        east = power_sequence(self._tm(b2, vertical=True).matrix, max_m)
        west = power_sequence(self._tm(b1, vertical=True).matrix, max_m)

        # trace(A_n . B_m . C_n . W_m): the n-dependent blocks are shared across m
        lower = [sw @ south[n] @ se for n in range(max_n + 1)]
        upper = [north[n] @ nw for n in range(max_n + 1)]
        east_blocks = [east[m] @ ne for m in range(max_m + 1)]
        table: Dict[Tuple[int, int], Any] = {}
        for m in range(max_m + 1):
            for n in range(max_n + 1):
                table[(m, n)] = _trace_of_product(
                    lower[n] @ east_blocks[m], upper[n] @ west[m]
                )
        self.logger.info(
            f"Computed {len(table)} entries of Frame({a1},{a2},{b1},{b2}) hole table"
        )
        return table

    def cross_seq(self, a: int, b: int, count: int) -> List[Any]:
        """
        Cross counts for arm lengths n = 0..count.

        The central block (width a, height b) is tiled with stick-outs on
        every side; an arm fed by stick-out state S contributes the entry
        TM^n[full ^ S, full] of its strip's transfer matrix.
        """
        if count < 0:
            raise ValueError("Term count cannot be negative")
        CrossSpec(a, b)
        if max(a, b) > self.width_cap:
            raise WidthCapError(max(a, b), self.width_cap)
        profiles = _cached_cross_centre(a, b, self.mode, self.weighted)
        horizontal = _final_columns(self._tm(b), count)
        vertical = _final_columns(self._tm(a, vertical=True), count)
        full_a, full_b = (1 << a) - 1, (1 << b) - 1
        zero, _ = _ring(self.mode, self.weighted)

        terms = []
        for n in range(count + 1):
            total = zero
            h_col, v_col = horizontal[n], vertical[n]
            for profile, value in profiles:
                up = profile & full_a
                down = (profile >> a) & full_a
                left = (profile >> (2 * a)) & full_b
                right = (profile >> (2 * a + b)) & full_b
                arms = [
                    v_col[full_a ^ up],
                    v_col[full_a ^ down],
                    h_col[full_b ^ left],
                    h_col[full_b ^ right],
                ]
                if any(x == zero for x in arms):
                    continue
                term = value
                for x in arms:
                    term = term * x
                total = total + term
            terms.append(total)
        self.logger.info(f"Computed {len(terms)} terms of Cross({a},{b}) in {self.mode.value} mode")
        return terms


@lru_cache(maxsize=None)
def _cached_cross_centre(
    a: int, b: int, mode: TilingMode, weighted: bool
) -> Tuple[Tuple[int, Any], ...]:
    exits: Dict[Cell, List[Exit]] = {}
    offset = 0
    for side, length in ((Side.UP, a), (Side.DOWN, a), (Side.LEFT, b), (Side.RIGHT, b)):
        for slot, cell in enumerate(side_cells(side, b, a)):
            exits.setdefault(cell, []).append(Exit(side, offset + slot))
        offset += length
    table = TilingEnumerator(mode, weighted).profiles(build_rectangle(b, a), exits)
    logger.debug(f"Enumerated Cross({a},{b}) centre: {len(table)} profiles")
    return tuple(sorted(table.items(), key=lambda item: item[0]))


def _final_columns(tm: TransferMatrix, count: int) -> List[List[Any]]:
    """Column ``full`` of TM^n for n = 0..count."""
    matrix = tm.matrix
    transposed = matrix.transpose()
    column = [matrix.zero] * matrix.n_rows
    column[tm.full_state] = matrix.one
    out = [column]
    for _ in range(count):
        column = transposed.vector_product(column)
        out.append(column)
    return out


def frame_count(spec: FrameSpec, mode: TilingMode = TilingMode.DIMER) -> int:
    """Number of tilings of a frame, by the trace formula."""
    return FrameEngine(mode).frame_count(spec)


def frame_count_weighted(spec: FrameSpec, mode: TilingMode = TilingMode.DIMER) -> MultiPoly:
    """Weight enumerator of a frame, by the trace formula."""
    return FrameEngine(mode, weighted=True).frame_count(spec)


def frame_seq(
    a1: int, a2: int, b1: int, b2: int, count: int, mode: TilingMode = TilingMode.DIMER
) -> Terms:
    """Frame counts with square n x n holes, n = 0..count."""
    return FrameEngine(mode).frame_seq(a1, a2, b1, b2, count)


def frame_seq_weighted(
    a1: int, a2: int, b1: int, b2: int, count: int, mode: TilingMode = TilingMode.DIMER
) -> List[MultiPoly]:
    """Frame weight enumerators with square n x n holes, n = 0..count."""
    return FrameEngine(mode, weighted=True).frame_seq(a1, a2, b1, b2, count)


def frame_table(
    a1: int,
    a2: int,
    b1: int,
    b2: int,
    max_m: int,
    max_n: int,
    mode: TilingMode = TilingMode.DIMER,
) -> Table:
    """Frame counts D(m, n) for 0 <= m <= max_m, 0 <= n <= max_n."""
    return FrameEngine(mode).frame_table(a1, a2, b1, b2, max_m, max_n)


def cross_seq(a: int, b: int, count: int, mode: TilingMode = TilingMode.DIMER) -> Terms:
    """Cross counts for arm lengths n = 0..count."""
    return FrameEngine(mode).cross_seq(a, b, count)


def cross_seq_weighted(
    a: int, b: int, count: int, mode: TilingMode = TilingMode.DIMER
) -> List[MultiPoly]:
    """Cross weight enumerators for arm lengths n = 0..count."""
    return FrameEngine(mode, weighted=True).cross_seq(a, b, count)