"""
C-finite sequences and rational generating functions.

A CFinite is coded as [[d1..dL], [c1..cL]]: initial terms a(0..L-1) and
coefficients of a(n) = c1 a(n-1) + ... + cL a(n-L), valid for every n >= L.
Fibonacci is [[0, 1], [1, 1]]. This module guesses such descriptions from
exact data, decides equality, does termwise algebra, converts to and from
rational generating functions and fits bivariate generating functions of
doubly C-finite tables.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .exceptions import GuessError, NoPowerSeriesError
from .matrices import RingMatrix, companion_matrix, direct_sum, kronecker, solve_linear_exact
from .polynomials import (
    MultiPoly,
    RationalFunction,
    UniPoly,
    canonical_number,
    exact_div,
    format_multipoly,
    format_unipoly,
    poly_lcm,
    rf_normalize,
    rf_series,
)
from .types import CiucuClass, GuessConfig, Rational, RationalTerms, VerifyStatus

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CFinite:
    """Initial terms and recurrence coefficients of a C-finite sequence."""
    initial: Tuple[Rational, ...]
    coeffs: Tuple[Rational, ...]

    def __post_init__(self) -> None:
        """Validate and canonicalize the coding."""
        if len(self.initial) != len(self.coeffs):
            raise ValueError(
                f"C-finite coding needs as many initial terms ({len(self.initial)}) "
                f"as coefficients ({len(self.coeffs)})"
            )
        object.__setattr__(self, "initial", tuple(canonical_number(x) for x in self.initial))
        object.__setattr__(self, "coeffs", tuple(canonical_number(c) for c in self.coeffs))

    @classmethod
    def from_coding(cls, coding: Sequence[Sequence[Rational]]) -> "CFinite":
        """Build from [[d1..dL], [c1..cL]]."""
        initial, coeffs = coding
        return cls(tuple(initial), tuple(coeffs))

    @classmethod
    def zero(cls) -> "CFinite":
        return cls((), ())

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coding(self) -> List[List[Rational]]:
        return [list(self.initial), list(self.coeffs)]

    def to_json_dict(self) -> Dict[str, List[str]]:
        return {
            "initial": [str(x) for x in self.initial],
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json_dict(cls, data: Dict[str, Sequence[Any]]) -> "CFinite":
        try:
            initial = tuple(Fraction(str(x)) for x in data["initial"])
            coeffs = tuple(Fraction(str(c)) for c in data["coeffs"])
        except (KeyError, ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Invalid C-finite JSON: {e}") from None
        return cls(initial, coeffs)

    def __str__(self) -> str:
        initial = ", ".join(str(x) for x in self.initial)
        coeffs = ", ".join(str(c) for c in self.coeffs)
        return f"[[{initial}], [{coeffs}]]"


def cfinite_nth(cf: CFinite, n: int) -> Rational:
    """a(n), by unrolling the recurrence with a sliding window."""
    if n < 0:
        raise ValueError("Sequence index cannot be negative")
    if n < cf.order:
        return cf.initial[n]
    if cf.order == 0:
        return 0
    window = list(cf.initial)
    for _ in range(n - cf.order + 1):
        nxt = sum(c * window[-i] for i, c in enumerate(cf.coeffs, start=1))
        window = window[1:] + [nxt]
    return canonical_number(window[-1])


def cfinite_terms(cf: CFinite, count: int) -> RationalTerms:
    """The first ``count`` terms a(0), ..., a(count-1)."""
    if count < 0:
        raise ValueError("Term count cannot be negative")
    terms: RationalTerms = list(cf.initial[:count])
    for n in range(len(terms), count):
        if cf.order == 0:
            terms.append(0)
            continue
        terms.append(canonical_number(
            sum(c * terms[n - i] for i, c in enumerate(cf.coeffs, start=1))
        ))
    return terms


def linear_complexity(seq: Sequence[Rational]) -> int:
    """
    Length of the shortest recurrence generating ``seq`` (Berlekamp-Massey).

    Runs over exact rationals, so leading zeros and singular Hankel blocks
    are handled without special cases.
    """
    connection: List[Fraction] = [Fraction(1)]
    previous: List[Fraction] = [Fraction(1)]
    length, gap, last_discrepancy = 0, 1, Fraction(1)
    for n, value in enumerate(seq):
        discrepancy = Fraction(value) + sum(
            (connection[i] * seq[n - i] for i in range(1, min(length, len(connection) - 1) + 1)),
            Fraction(0),
        )
        if discrepancy == 0:
            gap += 1
            continue
        factor = discrepancy / last_discrepancy
        updated = connection + [Fraction(0)] * max(0, len(previous) + gap - len(connection))
        for i, b in enumerate(previous):
            updated[i + gap] -= factor * b
        if 2 * length <= n:
            previous = connection
            length = n + 1 - length
            last_discrepancy = discrepancy
            gap = 1
        else:
            gap += 1
        connection = updated
    return length


def _fits(seq: Sequence[Rational], coeffs: Sequence[Rational]) -> bool:
    order = len(coeffs)
    for n in range(order, len(seq)):
        if sum(c * seq[n - i] for i, c in enumerate(coeffs, start=1)) != seq[n]:
            return False
    return True


def guess_cfinite(seq: Sequence[Rational], config: Optional[GuessConfig] = None) -> Optional[CFinite]:
    """
    Guess the minimal-order recurrence of an exact sequence.

    The order L is the sequence's linear complexity; the coefficients solve
    the full Hankel system a(n) = sum c_i a(n-i) for every n = L..len-1,
    so the result reproduces every supplied term.

    Args:
        seq: Exact terms a(0), a(1), ...
        config: Order limit and the number of terms required beyond 2L

    Returns:
        The recurrence, or None if no order within max_order is supported
        by at least 2L + margin terms
    """
    config = config or GuessConfig()
    seq = [canonical_number(Fraction(x)) for x in seq]
    order = linear_complexity(seq)
    if order > config.max_order:
        logger.warning(f"No recurrence of order <= {config.max_order} fits {len(seq)} terms")
        return None
    if len(seq) < 2 * order + config.margin:
        logger.warning(
            f"Order {order} needs {2 * order + config.margin} terms, only {len(seq)} given"
        )
        return None
    if order == 0:
        return CFinite.zero()

    rows = [[seq[n - i] for i in range(1, order + 1)] for n in range(order, len(seq))]
    rhs = [seq[n] for n in range(order, len(seq))]
    coeffs = solve_linear_exact(rows, rhs, order)
    if coeffs is None or not _fits(seq, coeffs):
        raise GuessError(f"Hankel system of order {order} has no exact solution")
    logger.info(f"Guessed a recurrence of order {order} from {len(seq)} terms")
    return CFinite(tuple(seq[:order]), tuple(coeffs))


def cfinite_equal(first: CFinite, second: CFinite) -> bool:
    """
    Decide equality of two C-finite sequences.

    Their difference has order at most L_A + L_B, so agreement on that many
    leading terms proves agreement everywhere.
    """
    count = first.order + second.order
    return cfinite_terms(first, count) == cfinite_terms(second, count)


def _minimize(terms: RationalTerms, bound: int, margin: int) -> CFinite:
    guessed = guess_cfinite(terms, GuessConfig(max_order=max(bound, 1), margin=margin))
    if guessed is None:
        raise GuessError(f"No recurrence of order <= {bound} reproduces the generated terms")
    return guessed


def _joint_terms(
    first: CFinite,
    second: CFinite,
    count: int,
    combine: Callable[[Rational, Rational], Rational],
    matrix: RingMatrix,
    state: List[Rational],
    readout: Callable[[Sequence[Rational]], Rational],
) -> RationalTerms:
    start = max(first.order, second.order) - 1
    terms = [
        canonical_number(combine(cfinite_nth(first, n), cfinite_nth(second, n)))
        for n in range(min(start, count))
    ]
    stepper = matrix.transpose()
    for _ in range(start, count):
        terms.append(canonical_number(readout(state)))
        state = stepper.vector_product(state)
    return terms


def _state(cf: CFinite, n: int) -> List[Rational]:
    """(a(n), a(n-1), ..., a(n-L+1))."""
    return [cfinite_nth(cf, n - k) for k in range(cf.order)]


def cfinite_add(first: CFinite, second: CFinite, margin: int = 5) -> CFinite:
    """
    Minimal description of the termwise sum.

    The sum evolves under the direct sum of the two companion matrices, so
    its order is at most L_A + L_B; 2(L_A + L_B) + margin generated terms
    are re-guessed to a minimal recurrence.
    """
    if first.order == 0:
        return second
    if second.order == 0:
        return first
    bound = first.order + second.order
    start = max(first.order, second.order) - 1
    terms = _joint_terms(
        first,
        second,
        2 * bound + margin,
        lambda x, y: x + y,
        direct_sum(companion_matrix(first.coeffs), companion_matrix(second.coeffs)),
        _state(first, start) + _state(second, start),
        lambda s: s[0] + s[first.order],
    )
    return _minimize(terms, bound, margin)


def cfinite_mul(first: CFinite, second: CFinite, margin: int = 5) -> CFinite:
    """
    Minimal description of the termwise product.

    The product evolves under the Kronecker product of the companion
    matrices, of order L_A * L_B once both recurrences are in force.
    """
    if first.order == 0 or second.order == 0:
        return CFinite.zero()
    # leading terms before both recurrences apply may add exceptions
    bound = first.order * second.order + max(first.order, second.order)
    start = max(first.order, second.order) - 1
    state = [x * y for x in _state(first, start) for y in _state(second, start)]
    terms = _joint_terms(
        first,
        second,
        2 * bound + margin,
        lambda x, y: x * y,
        kronecker(companion_matrix(first.coeffs), companion_matrix(second.coeffs)),
        state,
        lambda s: s[0],
    )
    return _minimize(terms, bound, margin)


def cfinite_scale(cf: CFinite, factor: Rational) -> CFinite:
    """The sequence factor * a(n)."""
    if factor == 0:
        return CFinite.zero()
    return CFinite(tuple(factor * x for x in cf.initial), cf.coeffs)


def cfinite_shift(cf: CFinite, k: int) -> CFinite:
    """The sequence a(n + k)."""
    if k < 0:
        raise ValueError("Shift must be nonnegative")
    return CFinite(tuple(cfinite_nth(cf, k + i) for i in range(cf.order)), cf.coeffs)


def to_rational_gf(cf: CFinite, var: str = "t") -> RationalFunction:
    """
    The generating function sum a(n) t^n as a reduced rational function.

    The denominator is 1 - c1 t - ... - cL t^L; the numerator is the
    product of the initial-term polynomial with it, truncated below t^L.
    """
    denominator = UniPoly([1] + [-c for c in cf.coeffs], var)
    numerator = (UniPoly(cf.initial, var) * denominator).truncate(cf.order)
    return rf_normalize(numerator, denominator)


def from_rational_gf(rf: RationalFunction) -> CFinite:
    """
    C-finite description of a rational generating function's coefficients.

    When deg P >= deg Q the order is raised to deg P + 1 with zero
    coefficients, so the leading terms become exceptional initial values.

    Raises:
        NoPowerSeriesError: If the denominator vanishes at t=0
    """
    den = rf.denominator
    q0 = den.constant_term
    if q0 == 0:
        raise NoPowerSeriesError()
    order = max(den.degree, rf.numerator.degree + 1)
    coeffs = [exact_div(-den.coefficient(i), q0) for i in range(1, order + 1)]
    initial = rf_series(rf, order - 1) if order else []
    return CFinite(tuple(initial), tuple(coeffs))


def guess_rational_gf(
    seq: Sequence[Rational], config: Optional[GuessConfig] = None, var: str = "t"
) -> Optional[RationalFunction]:
    """
    Guess the generating function of an exact sequence.

    Returns:
        The rational function, revalidated against every supplied term,
        or None
    """
    cf = guess_cfinite(seq, config)
    if cf is None:
        return None
    rf = to_rational_gf(cf, var)
    if seq and rf_series(rf, len(seq) - 1) != [canonical_number(Fraction(x)) for x in seq]:
        logger.warning("Guessed generating function does not re-expand to the input")
        return None
    logger.info(
        f"Guessed a generating function with denominator degree {rf.denominator.degree}"
    )
    return rf


def verify_cfinite_with_bound(cf: CFinite, seq: Sequence[Rational], bound: int) -> VerifyStatus:
    """
    Check data against a recurrence under an assumed order bound.

    If the data is known to be C-finite of order <= bound, agreement on
    order(cf) + bound terms proves identity for all n.
    """
    if bound < cf.order:
        raise ValueError(f"Bound {bound} is smaller than the recurrence order {cf.order}")
    expected = cfinite_terms(cf, len(seq))
    for n, (value, want) in enumerate(zip(seq, expected)):
        if canonical_number(Fraction(value)) != want:
            logger.info(f"Recurrence refuted at term {n}: {value} != {want}")
            return VerifyStatus.REFUTED
    if len(seq) >= cf.order + bound:
        return VerifyStatus.PROVED_UNDER_BOUND
    logger.info(f"{len(seq)} terms given, {cf.order + bound} needed for a proof")
    return VerifyStatus.INCONCLUSIVE


def knuth_formula_cfinite() -> CFinite:
    """
    4 (2 F(n+2)^2 + (-1)^n)^2 built with sequence algebra.

    n is the hole size of the square frame of thickness 2, so the first
    terms are 36, 196, 1444.
    """
    fibonacci = CFinite((0, 1), (1, 1))
    shifted = cfinite_shift(fibonacci, 2)
    alternating = CFinite((1,), (-1,))
    inner = cfinite_add(cfinite_scale(cfinite_mul(shifted, shifted), 2), alternating)
    return cfinite_scale(cfinite_mul(inner, inner), 4)


def ciucu_classify(value: int) -> CiucuClass:
    """Square, twice a square, or neither (0 counts as a square)."""
    if value < 0:
        raise ValueError(f"Cannot classify negative value {value}")
    root = math.isqrt(value)
    if root * root == value:
        return CiucuClass.SQUARE
    if value % 2 == 0:
        half = value // 2
        root = math.isqrt(half)
        if root * root == half:
            return CiucuClass.TWICE_SQUARE
    return CiucuClass.NEITHER


@dataclass(frozen=True)
class BivariateGF:
    """P(x, y) / (Q1(x) Q2(y)), the generating function of a doubly C-finite table."""
    numerator: MultiPoly
    q1: UniPoly
    q2: UniPoly

    @property
    def denominator(self) -> MultiPoly:
        variables = ("x", "y")
        terms: Dict[Tuple[int, int], Rational] = {}
        for i, a in enumerate(self.q1.coeffs):
            for j, b in enumerate(self.q2.coeffs):
                if a and b:
                    terms[(i, j)] = a * b
        return MultiPoly(variables, terms)

    def table(self, max_m: int, max_n: int) -> Dict[Tuple[int, int], Rational]:
        """Coefficients of x^m y^n for m <= max_m, n <= max_n."""
        grid = _dense(self.numerator, max_m, max_n)
        grid = _divide_columns(grid, self.q1)
        grid = [_divide_series(row, self.q2) for row in grid]
        return {(m, n): grid[m][n] for m in range(max_m + 1) for n in range(max_n + 1)}

    def __str__(self) -> str:
        return (
            f"({format_multipoly(self.numerator)}) / "
            f"(({format_unipoly(self.q1)}) * ({format_unipoly(self.q2)}))"
        )


def _dense(poly: MultiPoly, max_m: int, max_n: int) -> List[List[Rational]]:
    grid: List[List[Rational]] = [[0] * (max_n + 1) for _ in range(max_m + 1)]
    for (i, j), c in poly.terms.items():
        if i <= max_m and j <= max_n:
            grid[i][j] = c
    return grid


def _divide_series(coeffs: Sequence[Rational], den: UniPoly) -> List[Rational]:
    out: List[Rational] = []
    q0 = den.constant_term
    for k, c in enumerate(coeffs):
        acc = c
        for i in range(1, min(k, den.degree) + 1):
            acc -= den.coeffs[i] * out[k - i]
        out.append(exact_div(acc, q0))
    return out


def _divide_columns(grid: List[List[Rational]], den: UniPoly) -> List[List[Rational]]:
    columns = [_divide_series([row[j] for row in grid], den) for j in range(len(grid[0]))]
    return [[columns[j][i] for j in range(len(columns))] for i in range(len(grid))]


def _common_denominator(
    sequences: List[RationalTerms], config: GuessConfig, var: str
) -> Optional[UniPoly]:
    common = UniPoly.constant(1, var)
    for index, seq in enumerate(sequences):
        rf = guess_rational_gf(seq, config, var)
        if rf is None:
            logger.warning(f"No generating function for line {index} of the table")
            return None
        common = poly_lcm(common, rf.denominator)
    return common.scale(Fraction(1) / common.constant_term)


def guess_bivariate_gf(
    table: Dict[Tuple[int, int], Rational], config: Optional[GuessConfig] = None
) -> Optional[BivariateGF]:
    """
    Fit P(x, y) / (Q1(x) Q2(y)) to a table D(m, n), x marking m and y marking n.

    Q2 is the lcm of the denominators guessed along each fixed-m row, Q1
    likewise along columns. P is the product of the table's series with
    Q1 Q2, which must end at least ``margin`` steps short of the table in
    each direction.

    Returns:
        The fitted generating function, or None
    """
    config = config or GuessConfig()
    if not table:
        raise GuessError("Cannot fit a generating function to an empty table")
    max_m = max(m for m, _ in table)
    max_n = max(n for _, n in table)
    try:
        grid = [[table[(m, n)] for n in range(max_n + 1)] for m in range(max_m + 1)]
    except KeyError as e:
        raise GuessError(f"Table is missing entry {e.args[0]}") from None

    q2 = _common_denominator([list(row) for row in grid], config, "y")
    q1 = _common_denominator(
        [[grid[m][n] for m in range(max_m + 1)] for n in range(max_n + 1)], config, "x"
    )
    if q1 is None or q2 is None:
        return None

    product = [[0] * (max_n + 1) for _ in range(max_m + 1)]
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            acc: Rational = 0
            for i in range(min(m, q1.degree) + 1):
                for j in range(min(n, q2.degree) + 1):
                    acc += q1.coeffs[i] * q2.coeffs[j] * grid[m - i][n - j]
            product[m][n] = canonical_number(acc)

    terms = {(m, n): c for m, row in enumerate(product) for n, c in enumerate(row) if c}
    degree_x = max((m for m, _ in terms), default=0)
    degree_y = max((n for _, n in terms), default=0)
    if max_m - degree_x < config.margin or max_n - degree_y < config.margin:
        logger.warning(
            f"Numerator degrees ({degree_x}, {degree_y}) leave fewer than "
            f"{config.margin} zero lines in a {max_m + 1}x{max_n + 1} table"
        )
        return None

    result = BivariateGF(MultiPoly(("x", "y"), terms), q1, q2)
    expanded = result.table(max_m, max_n)
    if any(expanded[key] != grid[key[0]][key[1]] for key in expanded):
        logger.warning("Bivariate generating function does not re-expand to the table")
        return None
    logger.info(
        f"Fitted a bivariate generating function with denominator degrees "
        f"({q1.degree}, {q2.degree})"
    )
    return result
