"""
Statistics of tile counts.

A weight enumerator restricted to one variable is the probability
generating function (up to normalization) of the number of tiles of that
kind in a uniformly random tiling. Moments up to order four come from its
derivatives at 1; the growth rate of a counting sequence is estimated from
ratios of consecutive high-index terms.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence

import mpmath

from .exceptions import SequenceError
from .polynomials import MultiPoly, UniPoly
from .recurrences import CFinite, cfinite_terms
from .types import GrowthEstimate, MomentRecord, MomentReport, Rational

logger = logging.getLogger(__name__)

DEFAULT_GROWTH_INDEX = 40
DEFAULT_GROWTH_PRECISION = 30


def factorial_moments(poly: UniPoly, up_to: int) -> List[Fraction]:
    """E[X], E[X(X-1)], ... up to order ``up_to``, from derivatives at 1."""
    total = Fraction(poly.evaluate(1))
    moments = []
    derivative = poly
    for _ in range(up_to):
        derivative = derivative.derivative()
        moments.append(Fraction(derivative.evaluate(1)) / total)
    return moments


def moment_record(index: int, poly: UniPoly, up_to: int = 4) -> MomentRecord:
    """
    Exact moments of the distribution encoded by one enumerator.

    Args:
        index: Position of the enumerator in its family
        poly: Enumerator in one variable, nonnegative coefficients
        up_to: Highest moment order (1..4)

    Returns:
        Mean, central moments and standardized shape measures; skewness
        is reported squared to stay rational
    """
    if any(c < 0 for c in poly.coeffs):
        raise SequenceError(f"Enumerator {index} has a negative coefficient")
    total = Fraction(poly.evaluate(1))
    if total == 0:
        raise SequenceError(f"Enumerator {index} is zero: no tilings to average over")

    f = factorial_moments(poly, up_to) + [Fraction(0)] * (4 - up_to)
    # raw moments via Stirling numbers of the second kind
    e1 = f[0]
    e2 = f[1] + f[0]
    e3 = f[2] + 3 * f[1] + f[0]
    e4 = f[3] + 6 * f[2] + 7 * f[1] + f[0]
    mean = e1

    variance = third = fourth = skew2 = kurtosis = None
    if up_to >= 2:
        variance = e2 - mean ** 2
    if up_to >= 3:
        third = e3 - 3 * mean * e2 + 2 * mean ** 3
        if variance:
            skew2 = third ** 2 / variance ** 3
    if up_to >= 4:
        fourth = e4 - 4 * mean * e3 + 6 * mean ** 2 * e2 - 3 * mean ** 4
        if variance:
            kurtosis = fourth / variance ** 2

    return MomentRecord(
        index=index,
        total=total,
        mean=mean,
        variance=variance,
        third_central=third,
        fourth_central=fourth,
        skewness_squared=skew2,
        kurtosis=kurtosis,
    )


def weighted_moments(polys: Sequence[MultiPoly], variable: str, up_to: int = 4) -> MomentReport:
    """
    Moments of the number of ``variable`` tiles, one record per enumerator.

    The other weight variables are set to 1.

    Raises:
        SequenceError: If an enumerator is zero or has negative coefficients
    """
    report = MomentReport(variable=variable, up_to=up_to)
    for index, poly in enumerate(polys):
        if variable not in poly.variables:
            raise ValueError(f"Variable {variable!r} not among {poly.variables}")
        report.records.append(moment_record(index, poly.restrict(variable), up_to))
    logger.info(f"Computed moments of {variable} for {len(report.records)} enumerators")
    return report


def _mpf(value: Rational) -> mpmath.mpf:
    value = Fraction(value)
    return mpmath.mpf(value.numerator) / value.denominator


def growth_rate(
    cf: CFinite,
    terms: Optional[Sequence[Rational]] = None,
    index: int = DEFAULT_GROWTH_INDEX,
    precision: int = DEFAULT_GROWTH_PRECISION,
) -> GrowthEstimate:
    """
    Estimate the dominant growth ratio lim a(n+1)/a(n).

    The estimate is a(K+1)/a(K) at K = index, computed from cf with
    ``precision`` significant digits; its error bound is the change from
    the previous ratio.

    Args:
        cf: The sequence's recurrence
        terms: Known data the recurrence must reproduce
        index: K
        precision: Decimal digits of working precision

    Raises:
        SequenceError: If the sequence is not positive around K, or
            disagrees with the given terms
    """
    if index < 1:
        raise ValueError("Growth index must be at least 1")
    values = cfinite_terms(cf, max(index + 2, len(terms or ())))
    if terms is not None:
        for n, value in enumerate(terms):
            if Fraction(value) != values[n]:
                raise SequenceError(f"Recurrence disagrees with the data at term {n}")
    window = values[index - 1:index + 2]
    if any(x <= 0 for x in window):
        raise SequenceError(
            f"Sequence is not positive near index {index}; no growth ratio exists"
        )

    with mpmath.workdps(precision):
        previous = _mpf(window[1]) / _mpf(window[0])
        current = _mpf(window[2]) / _mpf(window[1])
        error = abs(current - previous)
        estimate = GrowthEstimate(
            value=mpmath.nstr(current, precision),
            error=mpmath.nstr(error, 5),
            index=index,
        )
    logger.info(f"Growth ratio at index {index}: {estimate.value} +/- {estimate.error}")
    return estimate
