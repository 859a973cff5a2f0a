"""
Transfer matrices for fixed-width strips.

A column state is a bitmask over the m cells of a column, bit k standing
for the (k+1)-th cell from the bottom; it records which cells are still
available once the previous column's protruding dominoes are placed.
Entry (i, j) of TM(m) aggregates the ways to fill a column whose available
cells are state i so that state j is left available in the next column.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Tuple

from .exceptions import WidthCapError
from .matrices import RingMatrix
from .polynomials import MultiPoly
from .types import Terms, TilingMode

logger = logging.getLogger(__name__)

DEFAULT_WIDTH_CAP = 8


@dataclass(frozen=True)
class TransferMatrix:
    """TM(m) for one mode, with integer or weight-polynomial entries."""
    matrix: RingMatrix
    width: int
    mode: TilingMode
    weighted: bool

    @property
    def full_state(self) -> int:
        return (1 << self.width) - 1

    def with_swapped_weights(self) -> "TransferMatrix":
        """The same matrix with h and v exchanged, for strips running vertically."""
        if not self.weighted:
            return self
        swapped = self.matrix.map(lambda p: p.swap("h", "v"))
        return TransferMatrix(swapped, self.width, self.mode, self.weighted)


def state_cells(state: int, m: int) -> List[int]:
    """The 1-based cell labels of a state (the set SN of its index)."""
    return [k + 1 for k in range(m) if (state >> k) & 1]


def state_from_cells(cells: List[int]) -> int:
    """Bitmask of a set of 1-based cell labels."""
    mask = 0
    for k in cells:
        if k < 1:
            raise ValueError(f"Cell labels start at 1, got {k}")
        mask |= 1 << (k - 1)
    return mask


def _follower_terms(state: int, m: int, mode: TilingMode) -> Dict[int, Dict[Tuple[int, ...], int]]:
    full = (1 << m) - 1
    monomers = mode.allows_monomers
    out: Dict[int, Dict[Tuple[int, ...], int]] = {}
    # (position, protruding set, #h, #v, #m)
    stack = [(0, 0, 0, 0, 0)]
    while stack:
        y, protrude, nh, nv, nm = stack.pop()
        while y < m and not (state >> y) & 1:
            y += 1
        if y >= m:
            exps = (nh, nv, nm) if monomers else (nh, nv)
            bucket = out.setdefault(full ^ protrude, {})
            bucket[exps] = bucket.get(exps, 0) + 1
            continue
        stack.append((y + 1, protrude | (1 << y), nh + 1, nv, nm))
        if y + 1 < m and (state >> (y + 1)) & 1:
            stack.append((y + 2, protrude, nh, nv + 1, nm))
        if monomers:
            stack.append((y + 1, protrude, nh, nv, nm + 1))
    return out


def followers(state: int, m: int, mode: TilingMode = TilingMode.DIMER) -> List[Tuple[int, MultiPoly]]:
    """
    All legal next-column states of a column state, with their weights.

    Available cells are covered by vertical dominoes inside the column (v),
    monomers (m, monomer-dimer mode only) or horizontal dominoes protruding
    into the next column (h). The follower is the complement of the
    protruding set.

    Args:
        state: Available cells of the current column
        m: Column height
        mode: Which tiles are allowed

    Returns:
        (follower state, weight polynomial) pairs sorted by state
    """
    if m < 0:
        raise ValueError("Strip width cannot be negative")
    if state < 0 or state >> m:
        raise ValueError(f"State {state} is not a subset of {m} cells")
    variables = mode.weight_variables
    return [
        (follower, MultiPoly(variables, terms))
        for follower, terms in sorted(_follower_terms(state, m, mode).items())
    ]


@lru_cache(maxsize=None)
def _cached_tm(m: int, mode: TilingMode, weighted: bool) -> TransferMatrix:
    size = 1 << m
    variables = mode.weight_variables
    if weighted:
        zero: Any = MultiPoly(variables)
        one: Any = MultiPoly.constant(1, variables)
    else:
        zero, one = 0, 1
    rows: List[List[Any]] = [[zero] * size for _ in range(size)]
    for state in range(size):
        for follower, terms in _follower_terms(state, m, mode).items():
            if weighted:
                rows[state][follower] = MultiPoly(variables, terms)
            else:
                rows[state][follower] = sum(terms.values())
    logger.debug(f"Built TM({m}) in {mode.value} mode (weighted={weighted}), dimension {size}")
    return TransferMatrix(RingMatrix(rows, zero, one, n_cols=size), m, mode, weighted)


def build_tm(
    m: int,
    mode: TilingMode = TilingMode.DIMER,
    weighted: bool = False,
    width_cap: int = DEFAULT_WIDTH_CAP,
) -> TransferMatrix:
    """
    The 2^m x 2^m transfer matrix of the follower relation.

    Matrices are built once per (m, mode, weighted) and reused.

    Raises:
        WidthCapError: If m exceeds width_cap
    """
    if m < 1:
        raise ValueError("Strip width must be at least 1")
    if m > width_cap:
        raise WidthCapError(m, width_cap)
    return _cached_tm(m, mode, weighted)


def power_sequence(matrix: RingMatrix, count: int) -> List[RingMatrix]:
    """M^0, M^1, ..., M^count by repeated multiplication."""
    powers = [RingMatrix.identity(matrix.dimension, matrix.zero, matrix.one)]
    for _ in range(count):
        powers.append(powers[-1] @ matrix)
    return powers


def _propagate_full(tm: TransferMatrix, count: int) -> List[Any]:
    full = tm.full_state
    vector = [tm.matrix.zero] * (full + 1)
    vector[full] = tm.matrix.one
    out = []
    for n in range(count + 1):
        out.append(vector[full])
        if n < count:
            vector = tm.matrix.vector_product(vector)
    return out


def seq_rect(
    m: int,
    count: int,
    mode: TilingMode = TilingMode.DIMER,
    width_cap: int = DEFAULT_WIDTH_CAP,
) -> Terms:
    """
    Tilings of the m x n rectangle for n = 0..count.

    Args:
        m: Rectangle height (strip width)
        count: Last length to report
        mode: Which tiles are allowed
        width_cap: Largest admissible m

    Returns:
        count + 1 exact counts
    """
    if count < 0:
        raise ValueError("Term count cannot be negative")
    terms = _propagate_full(build_tm(m, mode, False, width_cap), count)
    logger.info(f"Computed {len(terms)} rectangle terms for width {m}")
    return terms


def seq_rect_weighted(
    m: int,
    count: int,
    mode: TilingMode = TilingMode.DIMER,
    width_cap: int = DEFAULT_WIDTH_CAP,
) -> List[MultiPoly]:
    """Weight enumerators of the m x n rectangles for n = 0..count."""
    if count < 0:
        raise ValueError("Term count cannot be negative")
    return _propagate_full(build_tm(m, mode, True, width_cap), count)
