"""Stirling numbers of the second kind, higher-order Bernoulli polynomials,
and the convolution identity tying them to the weighted Bernstein family.

The family's generating series factors as

    weight * x**k  *  (exp(t)-1)**k / k!  *  t**k * exp((1-x)*t) / (exp(t)-1)**k

whose two right-hand factors generate, respectively, the Stirling numbers
``S(n, k)`` and the order-``k`` Bernoulli polynomials ``B_n^{(k)}(1-x)``.
The Cauchy product of those series is the convolution checked by
:func:`connection_identity`.

All series work here is exact; the reciprocal of ``(exp(t)-1)/t`` is taken
with the unit-leading reciprocal recurrence, never by dividing floats.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Dict

from .exact import (
    RationalLike,
    TruncatedSeries,
    binomial,
    series_exp_linear,
    series_mul,
    series_pow,
    series_reciprocal,
)
from .family import UnifiedIndex, eval_closed

__all__ = [
    "StirlingTable",
    "stirling2",
    "stirling2_via_series",
    "HigherBernoulliEvaluator",
    "bernoulli_higher",
    "connection_identity",
]


class StirlingTable:
    """Triangular table of S(n, v), grown on demand.

    Built from the recurrence S(n, v) = v*S(n-1, v) + S(n-1, v-1) with
    S(0, 0) = 1.  Reads are lock-free once a row exists; growth is
    serialized.
    """

    def __init__(self, n_max: int = 0):
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()
        if n_max > 0:
            self.extend(n_max)

    @property
    def n_max(self) -> int:
        return len(self._rows) - 1

    def extend(self, n_max: int) -> None:
        with self._lock:
            while len(self._rows) <= n_max:
                prev = self._rows[-1]
                n = len(self._rows)
                row = [0] * (n + 1)
                for v in range(1, n):
                    row[v] = v * prev[v] + prev[v - 1]
                row[n] = 1
                self._rows.append(row)

    def value(self, n: int, v: int) -> int:
        if n < 0 or v < 0:
            raise ValueError(f"stirling2 requires n, v >= 0, got n={n}, v={v}")
        if v > n:
            return 0
        if n > self.n_max:
            self.extend(n)
        return self._rows[n][v]


_DEFAULT_TABLE = StirlingTable()


def stirling2(n: int, v: int) -> int:
    """S(n, v): partitions of an n-set into v nonempty blocks (0 if v > n)."""
    return _DEFAULT_TABLE.value(n, v)


def stirling2_via_series(n: int, v: int) -> int:
    """S(n, v) extracted from the generating series (exp(t)-1)**v / v!.

    Independent of the triangular recurrence; the two must agree.
    """
    if n < 0 or v < 0:
        raise ValueError(f"stirling2_via_series requires n, v >= 0, got n={n}, v={v}")
    expm1 = series_exp_linear(1, n) - TruncatedSeries.one(n)
    powered = series_pow(expm1, v)
    v_factorial = 1
    for i in range(2, v + 1):
        v_factorial *= i
    n_factorial = 1
    for i in range(2, n + 1):
        n_factorial *= i
    value = powered[n] * n_factorial / v_factorial
    assert value.denominator == 1
    return int(value)


class HigherBernoulliEvaluator:
    """Evaluator for order-``v`` Bernoulli polynomials via a cached series.

    Caches the exact truncated series of ``(t/(exp(t)-1))**v`` and extends it
    on demand; its constant term is always 1.
    """

    def __init__(self, v: int, order: int = 0):
        if v < 0:
            raise ValueError(f"order v must be >= 0, got {v}")
        self.v = v
        self._series = self._build(order)
        self._lock = threading.Lock()

    def _build(self, order: int) -> TruncatedSeries:
        # (exp(t)-1)/t has coefficients 1/(j+1)!, unit leading term.
        coeffs = [Fraction(1)]
        for j in range(1, order + 1):
            coeffs.append(coeffs[-1] / (j + 1))
        base = series_reciprocal(TruncatedSeries(coeffs))
        return series_pow(base, self.v)

    def series(self, order: int) -> TruncatedSeries:
        if order > self._series.order:
            with self._lock:
                if order > self._series.order:
                    self._series = self._build(order)
        s = self._series
        if s.order == order:
            return s
        return TruncatedSeries(s.coefficients[: order + 1])

    def value(self, n: int, x: RationalLike) -> Fraction:
        """B_n^{(v)}(x) = n! * [t**n] (t/(exp(t)-1))**v * exp(x*t)."""
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        x = Fraction(x)
        core = self.series(n)
        # n! * sum_j core[j] * x**(n-j) / (n-j)!  ==  sum_j C(n,j) j! core[j] x**(n-j)
        total = Fraction(0)
        falling = Fraction(1)  # n! / (n-j)! accumulated as j grows
        for j in range(n + 1):
            if j > 0:
                falling *= n - j + 1
            c = core[j]
            if c:
                total += falling * c * x ** (n - j)
        return total


_EVALUATORS: Dict[int, HigherBernoulliEvaluator] = {}
_EVALUATORS_LOCK = threading.Lock()


def _evaluator(v: int) -> HigherBernoulliEvaluator:
    ev = _EVALUATORS.get(v)
    if ev is None:
        with _EVALUATORS_LOCK:
            ev = _EVALUATORS.setdefault(v, HigherBernoulliEvaluator(v))
    return ev


def bernoulli_higher(n: int, v: int, x: RationalLike) -> Fraction:
    """Order-``v`` Bernoulli polynomial B_n^{(v)}(x), exactly.

    ``B_n^{(0)}(x) = x**n`` and ``B_0^{(v)}(x) = 1``; ``v = 1`` gives the
    classical Bernoulli polynomials.
    """
    return _evaluator(v).value(n, x)


def connection_identity(
    n: int, idx: UnifiedIndex, x: RationalLike
) -> tuple[Fraction, Fraction]:
    """Both sides of the Stirling/Bernoulli convolution for member (n, k).

    lhs is the closed-form member; rhs is
    ``weight * x**k * sum_j C(n,j) S(j,k) B_{n-j}^{(k)}(1-x)``.
    Stated only for the canonical index ``k = b*s``; the two sides are equal.
    """
    k = idx.k
    if not idx.is_canonical:
        raise ValueError(f"connection identity requires k = b*s, got k={k} for b={idx.b}, s={idx.s}")
    if n < k:
        raise ValueError(f"connection identity requires n >= k, got n={n}, k={k}")
    x = Fraction(x)
    lhs = eval_closed(n, idx, x)
    ev = _evaluator(k)
    total = Fraction(0)
    for j in range(n + 1):
        s_jk = stirling2(j, k)
        if s_jk:
            total += binomial(n, j) * s_jk * ev.value(n - j, 1 - x)
    rhs = idx.weight * x**k * total
    return lhs, rhs
