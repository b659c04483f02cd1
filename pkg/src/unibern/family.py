"""The weighted two-parameter Bernstein family and its exact calculus.

A family member is indexed by a basis index ``k`` and a weight ``2**(b*(1-s))``
derived from two positive integers ``b`` and ``s``; for ``s == 1`` the weight
is 1 and the member is the classic Bernstein basis polynomial ``B_n(b, x)``.
The canonical basis index is ``k = b*s``, but ``k`` is carried independently
so the recurrence and derivative (which step the basis index down while the
weight stays fixed) are well defined even when ``k - 1`` does not factor.

Two independent evaluation routes are provided on purpose:

* :func:`eval_closed` -- the weighted binomial closed form;
* :func:`series_expand` -- coefficients extracted from the exponential
  generating series ``weight * x**k * t**k / k! * exp(t*(1-x))``.

Their exact agreement on sampled rationals is the backbone of the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .exact import (
    RationalLike,
    TruncatedSeries,
    binomial,
    series_exp_linear,
    series_mul,
)

__all__ = [
    "UnifiedIndex",
    "PolynomialInX",
    "eval_closed",
    "series_expand",
    "eval_recurrence",
    "derivative",
    "umbral_sum",
    "to_polynomial",
]


@dataclass(frozen=True)
class UnifiedIndex:
    """Index bundle (b, s, k, weight) selecting one family member.

    ``k`` defaults to ``b*s``.  The weight ``2**(b*(1-s))`` is determined by
    (b, s) alone and is held fixed under index decrements.
    """

    b: int
    s: int
    k: int = -1  # sentinel; replaced by b*s in __post_init__

    def __post_init__(self) -> None:
        if self.b < 1 or self.s < 1:
            raise ValueError(f"b and s must be positive integers, got b={self.b}, s={self.s}")
        if self.k == -1:
            object.__setattr__(self, "k", self.b * self.s)
        if self.k < 0:
            raise ValueError(f"basis index k must be >= 0, got k={self.k}")

    @property
    def weight(self) -> Fraction:
        return Fraction(2) ** (self.b * (1 - self.s))

    def with_k(self, k: int) -> "UnifiedIndex":
        """Same (b, s) -- hence same weight -- with a different basis index."""
        return UnifiedIndex(self.b, self.s, k)

    @property
    def is_canonical(self) -> bool:
        return self.k == self.b * self.s


class PolynomialInX:
    """Dense univariate polynomial with exact rational coefficients.

    Trailing zero coefficients are allowed; equality and degree ignore them.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Sequence[RationalLike]):
        self._coeffs = tuple(Fraction(c) for c in coefficients) or (Fraction(0),)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree_bound(self) -> int:
        return len(self._coeffs) - 1

    @property
    def degree(self) -> int:
        """Exact degree; -1 for the zero polynomial."""
        for i in range(len(self._coeffs) - 1, -1, -1):
            if self._coeffs[i]:
                return i
        return -1

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    def __call__(self, x: RationalLike) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def formal_derivative(self) -> "PolynomialInX":
        if len(self._coeffs) == 1:
            return PolynomialInX([0])
        return PolynomialInX([i * c for i, c in enumerate(self._coeffs)][1:])

    def _normalized(self) -> tuple[Fraction, ...]:
        d = self.degree
        return self._coeffs[: d + 1] if d >= 0 else ()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolynomialInX):
            return NotImplemented
        return self._normalized() == other._normalized()

    def __hash__(self) -> int:
        return hash(self._normalized())

    def __add__(self, other: "PolynomialInX") -> "PolynomialInX":
        n = max(len(self._coeffs), len(other._coeffs))
        return PolynomialInX(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)]
        )

    def __sub__(self, other: "PolynomialInX") -> "PolynomialInX":
        n = max(len(self._coeffs), len(other._coeffs))
        return PolynomialInX(
            [self.coefficient(i) - other.coefficient(i) for i in range(n)]
        )

    def scale(self, factor: RationalLike) -> "PolynomialInX":
        f = Fraction(factor)
        return PolynomialInX([f * c for c in self._coeffs])

    def __repr__(self) -> str:
        return f"PolynomialInX({[str(c) for c in self._coeffs]})"


def eval_closed(n: int, idx: UnifiedIndex, x: RationalLike) -> Fraction:
    """Closed-form value: weight * C(n, k) * x**k * (1-x)**(n-k).

    Members with ``n < k`` vanish identically, so 0 is returned rather than
    an error.  ``x`` is not restricted to [0, 1]: the identities checked
    against this function are polynomial in ``x``.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    k = idx.k
    if n < k:
        return Fraction(0)
    x = Fraction(x)
    return idx.weight * binomial(n, k) * x**k * (1 - x) ** (n - k)


def series_expand(idx: UnifiedIndex, x: RationalLike, order: int) -> list[Fraction]:
    """Family members 0..order read off the exponential generating series.

    The generating series is ``weight * x**k * t**k / k! * exp(t*(1-x))``;
    member ``n`` is ``n!`` times its ``t**n`` coefficient.  The computation
    goes through the truncated-series Cauchy product on purpose, keeping it
    an oracle independent of :func:`eval_closed`.  The first ``k`` entries
    are exactly zero.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    x = Fraction(x)
    k = idx.k
    k_factorial = Fraction(1)
    for i in range(2, k + 1):
        k_factorial *= i
    front = TruncatedSeries.monomial(k, order, idx.weight * x**k / k_factorial)
    series = series_mul(front, series_exp_linear(1 - x, order))
    out = []
    n_factorial = Fraction(1)
    for n, c in enumerate(series):
        if n > 1:
            n_factorial *= n
        out.append(c * n_factorial)
    return out


def eval_recurrence(n: int, idx: UnifiedIndex, x: RationalLike) -> Fraction:
    """Value via the two-term recurrence, with the weight held fixed.

    ``member(n, k) = x * member(n-1, k-1) + (1-x) * member(n-1, k)`` with base
    cases ``member(0, 0) = weight``, ``member(0, k>0) = 0`` and
    ``member(n, k<0) = 0``.  Agrees with :func:`eval_closed` exactly.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    x = Fraction(x)
    weight = idx.weight
    # Row-by-row over k in 0..idx.k keeps this O(n*k) without recursion.
    target_k = idx.k
    row = [weight] + [Fraction(0)] * target_k  # n = 0 row
    for m in range(1, n + 1):
        new_row = []
        for k in range(target_k + 1):
            below = row[k - 1] if k >= 1 else Fraction(0)
            new_row.append(x * below + (1 - x) * row[k])
        row = new_row
    return row[target_k]


def derivative(n: int, idx: UnifiedIndex) -> PolynomialInX:
    """Derivative polynomial ``n * (member(n-1, k-1) - member(n-1, k))``.

    Both terms are taken at degree ``n-1`` with the weight fixed; the result
    equals the formal x-derivative of :func:`to_polynomial`.  ``n == 0`` is
    rejected (the degree-0 member is constant; its derivative is the zero
    polynomial and needs no formula).
    """
    if n < 1:
        raise ValueError(f"derivative needs n >= 1, got n={n}")
    k = idx.k
    lower = (
        to_polynomial(n - 1, idx.with_k(k - 1))
        if k >= 1
        else PolynomialInX([0])
    )
    upper = to_polynomial(n - 1, idx)
    return (lower - upper).scale(n)


def umbral_sum(n: int, idx: UnifiedIndex, x: RationalLike) -> Fraction:
    """Alternating binomial sum ``sum_{j=k}^{n} C(n,j) (-1)^{n-j} (1-x)^{n-j} member(j, k)``.

    Collapses to ``weight * x**k`` when ``n == k`` and telescopes to 0 when
    ``n > k`` -- note the lower limit ``j = k`` is required for the
    telescoping; starting at ``j = k + 1`` leaves a nonzero remainder (see
    the identity audit).
    """
    k = idx.k
    if n < k:
        raise ValueError(f"umbral_sum needs n >= k, got n={n}, k={k}")
    x = Fraction(x)
    total = Fraction(0)
    for j in range(k, n + 1):
        sign = -1 if (n - j) % 2 else 1
        total += sign * binomial(n, j) * (1 - x) ** (n - j) * eval_closed(j, idx, x)
    return total


def to_polynomial(n: int, idx: UnifiedIndex) -> PolynomialInX:
    """Monomial coefficients of ``weight * C(n,k) * x**k * (1-x)**(n-k)``.

    Returns the zero polynomial when ``n < k`` (vanishing members).
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    k = idx.k
    if n < k:
        return PolynomialInX([0])
    lead = idx.weight * binomial(n, k)
    coeffs = [Fraction(0)] * (n + 1)
    for i in range(n - k + 1):
        sign = -1 if i % 2 else 1
        coeffs[k + i] = sign * lead * binomial(n - k, i)
    return PolynomialInX(coeffs)
