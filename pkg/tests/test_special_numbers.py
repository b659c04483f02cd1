"""Stirling numbers, higher-order Bernoulli polynomials, and the
convolution identity connecting them to the family."""

import math
from fractions import Fraction

import pytest

from unibern.exact import binomial
from unibern.family import UnifiedIndex, eval_closed
from unibern.special_numbers import (
    HigherBernoulliEvaluator,
    StirlingTable,
    bernoulli_higher,
    connection_identity,
    stirling2,
    stirling2_via_series,
)

F = Fraction


def stirling2_inclusion_exclusion(n: int, v: int) -> int:
    """Independent oracle: S(n,v) = (1/v!) sum_i (-1)^i C(v,i) (v-i)^n."""
    if v > n:
        return 0
    total = sum((-1) ** i * math.comb(v, i) * (v - i) ** n for i in range(v + 1))
    assert total % math.factorial(v) == 0
    return total // math.factorial(v)


class TestStirling:
    def test_diagonal(self):
        for n in range(8):
            assert stirling2(n, n) == 1

    def test_known_value(self):
        assert stirling2(4, 2) == 7

    def test_above_diagonal_is_zero(self):
        assert stirling2(3, 5) == 0

    def test_inclusion_exclusion_oracle(self):
        for n in range(0, 13):
            for v in range(0, n + 2):
                assert stirling2(n, v) == stirling2_inclusion_exclusion(n, v)

    def test_series_route_matches_recurrence(self):
        assert stirling2_via_series(2, 1) == 1
        assert stirling2_via_series(4, 2) == 7
        assert stirling2_via_series(0, 0) == 1
        for n in range(0, 21):
            for v in range(0, 11):
                assert stirling2_via_series(n, v) == stirling2(n, v)

    def test_table_growth(self):
        table = StirlingTable()
        assert table.value(6, 3) == 90
        assert table.n_max >= 6
        with pytest.raises(ValueError):
            table.value(-1, 0)


class TestHigherBernoulli:
    def test_degree_zero(self):
        for v in range(5):
            assert bernoulli_higher(0, v, F(3, 7)) == 1

    def test_linear_coefficient(self):
        # B_1^{(v)}(x) = x - v/2, from the series oracle
        for v in range(6):
            for x in [F(0), F(1, 2), F(-2, 3)]:
                assert bernoulli_higher(1, v, x) == x - F(v, 2)

    def test_classical_bernoulli_number(self):
        assert bernoulli_higher(2, 1, 0) == F(1, 6)

    def test_order_zero_is_power(self):
        for n in range(6):
            assert bernoulli_higher(n, 0, F(2, 5)) == F(2, 5) ** n

    def test_classical_difference_equation(self):
        # B_n(x+1) - B_n(x) = n x^(n-1)
        for n in range(1, 10):
            for x in [F(0), F(1, 3), F(1, 2), F(-3, 4)]:
                delta = bernoulli_higher(n, 1, x + 1) - bernoulli_higher(n, 1, x)
                assert delta == n * x ** (n - 1)

    def test_binomial_convolution(self):
        # B_n^{(v+w)}(x+y) = sum_j C(n,j) B_j^{(v)}(x) B_{n-j}^{(w)}(y)
        samples = [(F(1, 2), F(1, 3)), (F(0), F(2, 5)), (F(-1, 3), F(3, 4))]
        for v in range(4):
            for w in range(4):
                for n in range(9):
                    for x, y in samples:
                        lhs = bernoulli_higher(n, v + w, x + y)
                        rhs = sum(
                            binomial(n, j)
                            * bernoulli_higher(j, v, x)
                            * bernoulli_higher(n - j, w, y)
                            for j in range(n + 1)
                        )
                        assert lhs == rhs

    def test_evaluator_unit_leading_term(self):
        for v in range(5):
            ev = HigherBernoulliEvaluator(v, order=6)
            assert ev.series(6)[0] == 1

    def test_evaluator_extends_on_demand(self):
        ev = HigherBernoulliEvaluator(2, order=2)
        assert ev.series(10).order == 10
        assert ev.value(10, F(1, 2)) == bernoulli_higher(10, 2, F(1, 2))


class TestConnectionIdentity:
    X_GRID = [F(1, 9), F(1, 5), F(1, 3), F(1, 2), F(3, 5), F(2, 3), F(7, 8), F(1)]

    def test_example_bs_one(self):
        lhs, rhs = connection_identity(2, UnifiedIndex(1, 1), F(1, 2))
        assert lhs == rhs == F(1, 2)

    def test_collapse_at_x_one(self):
        for b, s in [(1, 1), (1, 2), (2, 1)]:
            idx = UnifiedIndex(b, s)
            lhs, rhs = connection_identity(idx.k, idx, F(1))
            assert lhs == rhs == idx.weight

    def test_example_bs_two(self):
        lhs, rhs = connection_identity(4, UnifiedIndex(2, 1), F(1, 3))
        assert lhs == rhs == F(8, 27)

    def test_exhaustive_small_indices(self):
        index_set = [
            UnifiedIndex(b, s)
            for b in range(1, 5)
            for s in range(1, 5)
            if b * s <= 4
        ]
        for idx in index_set:
            for n in range(idx.k, 13):
                for x in self.X_GRID:
                    lhs, rhs = connection_identity(n, idx, x)
                    assert lhs == rhs
                    assert lhs == eval_closed(n, idx, x)

    def test_n_below_k_rejected(self):
        with pytest.raises(ValueError):
            connection_identity(1, UnifiedIndex(2, 1), F(1, 2))

    def test_non_canonical_index_rejected(self):
        with pytest.raises(ValueError):
            connection_identity(5, UnifiedIndex(2, 2, 3), F(1, 2))
