"""
Exact polynomial arithmetic for skinny-tilings.

This module provides dense univariate polynomials (generating-function
numerators and denominators), sparse multivariate polynomials (weight
enumerators and bivariate numerators) and reduced rational functions with
their power-series expansion. Coefficients are Python ints or Fractions;
nothing here ever touches floating point.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .exceptions import NoPowerSeriesError, ZeroDenominatorError
from .types import Rational


def canonical_number(value: Rational) -> Rational:
    """Return ints as ints and integral Fractions as ints."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return value
    if isinstance(value, int):
        return value
    raise TypeError(f"Expected an int or Fraction, got {type(value).__name__}")


def exact_div(a: Rational, b: Rational) -> Rational:
    """Exact quotient a / b."""
    if b == 0:
        raise ZeroDivisionError("division by zero")
    return canonical_number(Fraction(a) / b)


def format_coefficient_term(coeff: Rational, monomial: str, first: bool) -> str:
    """Render one signed term such as '- 3*t^2' or '1/2*x*y'."""
    negative = coeff < 0
    magnitude = -coeff if negative else coeff
    if monomial and magnitude == 1:
        body = monomial
    elif monomial:
        body = f"{magnitude}*{monomial}"
    else:
        body = f"{magnitude}"
    if first:
        return f"-{body}" if negative else body
    return f"- {body}" if negative else f"+ {body}"


def _power(var: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return var
    return f"{var}^{exponent}"


class UniPoly:
    """
    Dense univariate polynomial, lowest degree first.

    Trailing zero coefficients are stripped, so the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Rational] = (), var: str = "t"):
        values = [canonical_number(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs: Tuple[Rational, ...] = tuple(values)
        self.var = var

    @classmethod
    def constant(cls, value: Rational, var: str = "t") -> "UniPoly":
        return cls([value], var)

    @classmethod
    def monomial(cls, degree: int, coeff: Rational = 1, var: str = "t") -> "UniPoly":
        return cls([0] * degree + [coeff], var)

    @classmethod
    def product(cls, factors: Iterable["UniPoly"], var: str = "t") -> "UniPoly":
        result = cls.constant(1, var)
        for factor in factors:
            result = result * factor
        return result

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Rational:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_term(self) -> Rational:
        return self.coeffs[0] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Rational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _coerce(self, other: Union["UniPoly", Rational]) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other], self.var)

    def __add__(self, other: Union["UniPoly", Rational]) -> "UniPoly":
        other = self._coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            (self.coefficient(k) + other.coefficient(k) for k in range(size)), self.var
        )

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly((-c for c in self.coeffs), self.var)

    def __sub__(self, other: Union["UniPoly", Rational]) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Rational) -> "UniPoly":
        return self._coerce(other) - self

    def __mul__(self, other: Union["UniPoly", Rational]) -> "UniPoly":
        if not isinstance(other, UniPoly):
            return UniPoly((c * other for c in self.coeffs), self.var)
        if self.is_zero() or other.is_zero():
            return UniPoly((), self.var)
        out: List[Rational] = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UniPoly":
        if exponent < 0:
            raise ValueError("Negative polynomial powers are not supported")
        result = UniPoly.constant(1, self.var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Rational) -> "UniPoly":
        return UniPoly((c * factor for c in self.coeffs), self.var)

    def divmod(self, divisor: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        """Euclidean division over the rationals."""
        if divisor.is_zero():
            raise ZeroDenominatorError()
        remainder = list(self.coeffs)
        quotient: List[Rational] = [0] * max(len(remainder) - divisor.degree, 0)
        lead = divisor.leading
        for shift in range(len(remainder) - len(divisor.coeffs), -1, -1):
            top = remainder[shift + divisor.degree]
            if top == 0:
                continue
            factor = exact_div(top, lead)
            quotient[shift] = factor
            for k, c in enumerate(divisor.coeffs):
                remainder[shift + k] = canonical_number(remainder[shift + k] - factor * c)
        return UniPoly(quotient, self.var), UniPoly(remainder, self.var)

    def __floordiv__(self, divisor: "UniPoly") -> "UniPoly":
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: "UniPoly") -> "UniPoly":
        return self.divmod(divisor)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(Fraction(1) / self.leading)

    def evaluate(self, point: Rational) -> Rational:
        result: Rational = 0
        for c in reversed(self.coeffs):
            result = result * point + c
        return canonical_number(result)

    def derivative(self) -> "UniPoly":
        return UniPoly((k * c for k, c in enumerate(self.coeffs) if k), self.var)

    def truncate(self, size: int) -> "UniPoly":
        """Keep the coefficients of t^0 .. t^(size-1)."""
        return UniPoly(self.coeffs[:size], self.var)

    def with_var(self, var: str) -> "UniPoly":
        return UniPoly(self.coeffs, var)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs and (
                self.var == other.var or len(self.coeffs) <= 1
            )
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self) -> str:
        return format_unipoly(self)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor (zero when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic least common multiple."""
    if a.is_zero() or b.is_zero():
        return UniPoly((), a.var)
    return (a * b // poly_gcd(a, b)).monic()


def format_unipoly(poly: UniPoly) -> str:
    """Constant-first, ascending-degree rendering, e.g. '36 - 23*t - 30*t^2'."""
    parts = []
    for k, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        parts.append(format_coefficient_term(c, _power(poly.var, k), not parts))
    return " ".join(parts) if parts else "0"


Exponents = Tuple[int, ...]


class MultiPoly:
    """
    Sparse multivariate polynomial with a fixed tuple of variables.

    Zero coefficients are never stored. Ints and Fractions coerce to
    constant polynomials, so ``sum(polys)`` works with the default start.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping[Exponents, Rational]] = None):
        self.variables: Tuple[str, ...] = tuple(variables)
        cleaned: Dict[Exponents, Rational] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != len(self.variables):
                raise ValueError(
                    f"Exponent vector {exps} does not match variables {self.variables}"
                )
            c = canonical_number(c)
            if c != 0:
                cleaned[tuple(exps)] = c
        self.terms = cleaned

    @classmethod
    def constant(cls, value: Rational, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, name: str, variables: Sequence[str]) -> "MultiPoly":
        exps = tuple(1 if v == name else 0 for v in variables)
        if sum(exps) != 1:
            raise ValueError(f"Unknown variable {name!r} for {tuple(variables)}")
        return cls(variables, {exps: 1})

    @property
    def arity(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Exponents) -> Rational:
        return self.terms.get(tuple(exps), 0)

    def _coerce(self, other: Union["MultiPoly", Rational]) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError(
                    f"Variable mismatch: {self.variables} vs {other.variables}"
                )
            return other
        return MultiPoly.constant(other, self.variables)

    def __add__(self, other: Union["MultiPoly", Rational]) -> "MultiPoly":
        other = self._coerce(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            terms[exps] = terms.get(exps, 0) + c
        return MultiPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Union["MultiPoly", Rational]) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Rational) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other: Union["MultiPoly", Rational]) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return MultiPoly(self.variables, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        terms: Dict[Exponents, Rational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                terms[exps] = terms.get(exps, 0) + c1 * c2
        return MultiPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        result = MultiPoly.constant(1, self.variables)
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, point: Mapping[str, Rational]) -> Rational:
        """Value at a point giving every variable."""
        missing = [v for v in self.variables if v not in point]
        if missing:
            raise ValueError(f"No value given for {', '.join(missing)}")
        values = [point[v] for v in self.variables]
        total: Rational = 0
        for exps, c in self.terms.items():
            term = c
            for value, e in zip(values, exps):
                if e:
                    term = term * value ** e
            total += term
        return canonical_number(total)

    def at_ones(self) -> Rational:
        """Value with every variable set to 1 (the plain count)."""
        return canonical_number(sum(self.terms.values()))

    def restrict(self, name: str) -> UniPoly:
        """The univariate polynomial in ``name`` obtained by setting the other variables to 1."""
        if name not in self.variables:
            raise ValueError(f"Unknown variable {name!r} for {self.variables}")
        position = self.variables.index(name)
        degree = max((e[position] for e in self.terms), default=0)
        coeffs: List[Rational] = [0] * (degree + 1)
        for exps, c in self.terms.items():
            coeffs[exps[position]] += c
        return UniPoly(coeffs, name)

    def swap(self, first: str, second: str) -> "MultiPoly":
        """Exchange the roles of two variables."""
        i, j = self.variables.index(first), self.variables.index(second)
        terms = {}
        for exps, c in self.terms.items():
            swapped = list(exps)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            terms[tuple(swapped)] = c
        return MultiPoly(self.variables, terms)

    def degree_in(self, name: str) -> int:
        position = self.variables.index(name)
        return max((e[position] for e in self.terms), default=-1)

    def sorted_terms(self) -> List[Tuple[Exponents, Rational]]:
        """Terms in constant-first order: total degree, then exponent vector."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MultiPoly.constant(other, self.variables).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MultiPoly({self.variables!r}, {self.terms!r})"

    def __str__(self) -> str:
        return format_multipoly(self)


def format_multipoly(poly: MultiPoly) -> str:
    """Constant-first rendering, e.g. '36 - 23*x - 23*y + 10*x*y'."""
    parts = []
    for exps, c in poly.sorted_terms():
        monomial = "*".join(
            _power(v, e) for v, e in zip(poly.variables, exps) if e
        )
        parts.append(format_coefficient_term(c, monomial, not parts))
    return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class RationalFunction:
    """A reduced quotient of univariate polynomials; build it with rf_normalize."""
    numerator: UniPoly
    denominator: UniPoly

    @property
    def var(self) -> str:
        return self.denominator.var

    def series(self, count: int) -> List[Rational]:
        return rf_series(self, count)

    def __str__(self) -> str:
        return f"({format_unipoly(self.numerator)}) / ({format_unipoly(self.denominator)})"


def rf_normalize(num: UniPoly, den: UniPoly) -> RationalFunction:
    """
    Canonical form of num / den.

    The pair is reduced by its gcd and scaled so the denominator is monic,
    which makes structural equality decide equality of rational functions.

    Raises:
        ZeroDenominatorError: If den is the zero polynomial
    """
    if den.is_zero():
        raise ZeroDenominatorError()
    var = den.var
    num = num.with_var(var)
    if num.is_zero():
        return RationalFunction(UniPoly((), var), UniPoly.constant(1, var))
    common = poly_gcd(num, den)
    num, den = num // common, den // common
    lead = Fraction(1) / den.leading
    return RationalFunction(num.scale(lead), den.scale(lead))


def rf_series(rf: RationalFunction, count: int) -> List[Rational]:
    """
    Power-series coefficients of t^0 .. t^count by exact long division.

    Raises:
        NoPowerSeriesError: If the denominator vanishes at t=0
    """
    den = rf.denominator
    q0 = den.constant_term
    if q0 == 0:
        raise NoPowerSeriesError()
    out: List[Rational] = []
    for k in range(count + 1):
        acc = rf.numerator.coefficient(k)
        for i in range(1, min(k, den.degree) + 1):
            acc -= den.coeffs[i] * out[k - i]
        out.append(exact_div(acc, q0))
    return out


def rf_equal(first: RationalFunction, second: RationalFunction) -> bool:
    """Equality by cross-multiplication, independent of any printed form."""
    return cross_multiply_equal(
        first.numerator, first.denominator, second.numerator, second.denominator
    )


def cross_multiply_equal(p1: UniPoly, q1: UniPoly, p2: UniPoly, q2: UniPoly) -> bool:
    """True when p1/q1 = p2/q2, i.e. p1*q2 = p2*q1."""
    var = q1.var
    return (p1.with_var(var) * q2.with_var(var)).coeffs == (
        p2.with_var(var) * q1.with_var(var)
    ).coeffs
