"""The identity audit: expected statuses, counterexample validity, JSON shape."""

import json
from fractions import Fraction

import pytest

from unibern.audit import (
    FAILS,
    HOLDS,
    audit_identities,
    default_x_samples,
    umbral_sum_from,
)
from unibern.exact import binomial
from unibern.family import UnifiedIndex, eval_closed, to_polynomial

F = Fraction

EXPECTED_STATUS = {
    "generating-function": HOLDS,
    "recurrence": HOLDS,
    "derivative": HOLDS,
    "derivative-as-printed": FAILS,
    "umbral-collapse": HOLDS,
    "umbral-vanishing": HOLDS,
    "umbral-as-printed": FAILS,
    "corollary": FAILS,
}


@pytest.fixture(scope="module")
def report():
    return audit_identities(10)


class TestStatuses:
    def test_every_identity_present_with_expected_status(self, report):
        statuses = {f.identity: f.status for f in report.findings}
        assert statuses == EXPECTED_STATUS

    def test_holding_identities_carry_no_counterexample(self, report):
        for finding in report.findings:
            if finding.status == HOLDS:
                assert finding.counterexample is None
            else:
                assert finding.counterexample is not None


class TestCorollary:
    def test_concrete_counterexample(self, report):
        ce = report.finding("corollary").counterexample
        assert (ce.n, ce.b, ce.s, ce.k) == (2, 1, 1, 1)
        assert ce.x == F(1, 2)
        assert ce.lhs == 1
        assert ce.rhs == F(3, 2)

    def test_counterexample_recomputes(self, report):
        ce = report.finding("corollary").counterexample
        idx = UnifiedIndex(ce.b, ce.s, ce.k)
        assert binomial(ce.n, ce.k) * eval_closed(ce.n - ce.k, idx, ce.x) == ce.lhs
        assert binomial(ce.n + ce.k, ce.n) * eval_closed(ce.n, idx, ce.x) == ce.rhs


class TestShiftedUmbral:
    def test_shifted_start_leaves_remainder(self):
        # Starting the sum at j = k+1 drops the j = k term; what remains is
        # minus that term.
        idx = UnifiedIndex(1, 1)
        value = umbral_sum_from(3, idx, F(1, 2), idx.k + 1)
        assert value == F(-3, 8)
        assert value != 0

    def test_remainder_formula(self):
        for b, s in [(1, 1), (2, 1), (1, 2)]:
            idx = UnifiedIndex(b, s)
            k = idx.k
            for n in range(k + 1, k + 6):
                for x in [F(1, 2), F(2, 7)]:
                    shifted = umbral_sum_from(n, idx, x, k + 1)
                    sign = -1 if (n - k) % 2 else 1
                    dropped = sign * binomial(n, k) * (1 - x) ** (n - k) * idx.weight * x**k
                    assert shifted == -dropped

    def test_audit_counterexample_recomputes(self, report):
        ce = report.finding("umbral-as-printed").counterexample
        idx = UnifiedIndex(ce.b, ce.s, ce.k)
        assert umbral_sum_from(ce.n, idx, ce.x, ce.k + 1) == ce.lhs
        assert ce.rhs == 0


class TestMixedDerivative:
    def test_audit_counterexample_recomputes(self, report):
        ce = report.finding("derivative-as-printed").counterexample
        idx = UnifiedIndex(ce.b, ce.s, ce.k)
        lhs = to_polynomial(ce.n, idx).formal_derivative()(ce.x)
        lower = eval_closed(ce.n - 1, idx.with_k(ce.k - 1), ce.x)
        rhs = ce.n * (lower - eval_closed(ce.n, idx, ce.x))
        assert (lhs, rhs) == (ce.lhs, ce.rhs)
        assert lhs != rhs


class TestReportSerialization:
    def test_json_schema(self, report):
        doc = json.loads(report.to_json())
        assert isinstance(doc, list)
        for entry in doc:
            assert set(entry) <= {"identity", "status", "counterexample"}
            assert entry["status"] in (HOLDS, FAILS)
            if "counterexample" in entry:
                ce = entry["counterexample"]
                assert set(ce) == {"n", "b", "s", "k", "x", "lhs", "rhs"}
                for key in ("n", "b", "s", "k"):
                    assert isinstance(ce[key], int)
                for key in ("x", "lhs", "rhs"):
                    # exact rationals cross the boundary as strings
                    Fraction(ce[key])

    def test_rationals_round_trip(self, report):
        ce = report.finding("corollary").counterexample
        obj = ce.to_obj()
        assert Fraction(obj["x"]) == ce.x
        assert Fraction(obj["lhs"]) == ce.lhs
        assert Fraction(obj["rhs"]) == ce.rhs


class TestSampling:
    def test_enough_distinct_samples(self):
        xs = default_x_samples(21)
        assert len(set(xs)) == 21
        assert xs[0] == F(1, 2)

    def test_nmax_validation(self):
        with pytest.raises(ValueError):
            audit_identities(0)
