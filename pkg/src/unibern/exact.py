"""Exact scalars, binomial combinatorics, and truncated power series.

Everything in this module is exact: the scalar is :class:`fractions.Fraction`
(re-exported as :data:`ExactRational`), so every identity check elsewhere in
the package is a statement about integers, not about floating-point noise.

A :class:`TruncatedSeries` is a formal power series in ``t`` cut off at a
fixed ``order``; arithmetic never reads or writes coefficients beyond that
order.  Truncated series are the independent oracle for the closed-form
family evaluations: the two code paths share no formulas.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "ExactRational",
    "RationalLike",
    "binomial",
    "TruncatedSeries",
    "series_mul",
    "series_exp_linear",
    "series_pow",
    "series_reciprocal",
]

# The exact scalar used throughout the package.  Fraction already maintains
# the canonical form we rely on: positive denominator, gcd(|num|, den) == 1.
ExactRational = Fraction

RationalLike = Union[Fraction, int]


def binomial(n: int, k: int) -> Fraction:
    """Binomial coefficient C(n, k) as an exact rational.

    Out-of-range ``k`` (negative or above ``n``) gives 0 instead of an error
    so summations can run over uniform index ranges.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


class TruncatedSeries:
    """Power series in ``t`` with exact coefficients, truncated at ``order``.

    Instances are immutable; all operations return new series.  Binary
    operations require both operands to share the same truncation order,
    since mixing orders silently changes what "equal up to truncation"
    means.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[RationalLike]):
        coeffs = tuple(Fraction(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        self._coeffs = coeffs

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([Fraction(0)] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([Fraction(1)] + [Fraction(0)] * order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: RationalLike = 1) -> "TruncatedSeries":
        """The series ``coeff * t**power`` (all zero if ``power > order``)."""
        if power < 0:
            raise ValueError(f"monomial power must be >= 0, got {power}")
        coeffs = [Fraction(0)] * (order + 1)
        if power <= order:
            coeffs[power] = Fraction(coeff)
        return cls(coeffs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Fraction:
        return self._coeffs[n]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self._coeffs)!r})"

    def _check_same_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"series order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_same_order(other)
        return TruncatedSeries(a + b for a, b in zip(self._coeffs, other._coeffs))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_same_order(other)
        return TruncatedSeries(a - b for a, b in zip(self._coeffs, other._coeffs))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-a for a in self._coeffs)

    def scale(self, factor: RationalLike) -> "TruncatedSeries":
        f = Fraction(factor)
        return TruncatedSeries(f * a for a in self._coeffs)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the shared order.

    Coefficient ``n`` of the result is ``sum(a[j] * b[n-j] for j in 0..n)``.
    """
    a._check_same_order(b)
    ac, bc = a.coefficients, b.coefficients
    out = []
    for n in range(a.order + 1):
        acc = Fraction(0)
        for j in range(n + 1):
            aj = ac[j]
            if aj:
                acc += aj * bc[n - j]
        out.append(acc)
    return TruncatedSeries(out)


def series_exp_linear(c: RationalLike, order: int) -> TruncatedSeries:
    """The exponential ``exp(c*t)`` truncated at ``order``: coefficient n is c**n / n!."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    c = Fraction(c)
    coeffs = [Fraction(1)]
    for n in range(1, order + 1):
        coeffs.append(coeffs[-1] * c / n)
    return TruncatedSeries(coeffs)


def series_pow(a: TruncatedSeries, v: int) -> TruncatedSeries:
    """``a**v`` by repeated multiplication; ``v == 0`` gives the constant-1 series."""
    if v < 0:
        raise ValueError(f"series_pow exponent must be >= 0, got {v}")
    result = TruncatedSeries.one(a.order)
    base = a
    # Binary exponentiation keeps the sweep over large v cheap.
    while v:
        if v & 1:
            result = series_mul(result, base)
        base = series_mul(base, base) if v > 1 else base
        v >>= 1
    return result


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with nonzero constant term.

    Uses the standard recurrence for the reciprocal of a unit-leading series:
    with r = 1/a, coefficient n of r is -(1/a0) * sum(a[j] * r[n-j], j=1..n).
    """
    a0 = a[0]
    if a0 == 0:
        raise ValueError("cannot invert a series with zero constant term")
    inv0 = Fraction(1) / a0
    out = [inv0]
    ac = a.coefficients
    for n in range(1, a.order + 1):
        acc = Fraction(0)
        for j in range(1, n + 1):
            aj = ac[j]
            if aj:
                acc += aj * out[n - j]
        out.append(-inv0 * acc)
    return TruncatedSeries(out)
