"""Mechanical audit of the family's quoted identities.

Every identity is a polynomial identity in ``x`` at each fixed (n, index),
so exact evaluation at ``n_max + 1`` distinct rational points per degree
bound is a complete check: an identity reported HOLDS is proved for all
``n <= n_max``, and one reported FAILS comes with a concrete counterexample.

Besides the identities the library implements, the audit deliberately
includes two commonly quoted variant forms that do *not* hold (a derivative
with mismatched degrees and an alternating sum started one index too high)
plus a corollary-style rescaling claim that fails a degree count.  Keeping
the failing forms in the report documents exactly where they break.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .exact import binomial
from .family import UnifiedIndex, eval_closed, eval_recurrence, series_expand, to_polynomial

__all__ = [
    "Counterexample",
    "AuditFinding",
    "AuditReport",
    "audit_identities",
    "default_index_set",
    "umbral_sum_from",
]

HOLDS = "HOLDS"
FAILS = "FAILS"


@dataclass(frozen=True)
class Counterexample:
    n: int
    b: int
    s: int
    k: int
    x: Fraction
    lhs: Fraction
    rhs: Fraction

    def to_obj(self) -> dict:
        return {
            "n": self.n,
            "b": self.b,
            "s": self.s,
            "k": self.k,
            "x": str(self.x),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
        }


@dataclass(frozen=True)
class AuditFinding:
    identity: str
    status: str
    counterexample: Optional[Counterexample] = None

    def to_obj(self) -> dict:
        obj: dict = {"identity": self.identity, "status": self.status}
        if self.counterexample is not None:
            obj["counterexample"] = self.counterexample.to_obj()
        return obj


@dataclass(frozen=True)
class AuditReport:
    n_max: int
    findings: tuple[AuditFinding, ...]

    def finding(self, identity: str) -> AuditFinding:
        for f in self.findings:
            if f.identity == identity:
                return f
        raise KeyError(identity)

    def to_obj(self) -> list[dict]:
        return [f.to_obj() for f in self.findings]

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_obj(), indent=indent)


def default_index_set(b_max: int = 3, s_max: int = 3) -> list[UnifiedIndex]:
    """Canonical indices (k = b*s) for all b <= b_max, s <= s_max."""
    return [UnifiedIndex(b, s) for b in range(1, b_max + 1) for s in range(1, s_max + 1)]


def default_x_samples(count: int) -> list[Fraction]:
    """``count`` distinct rationals in (0, 1), with 1/2 first."""
    xs = [Fraction(1, 2)]
    den = count + 2
    i = 1
    while len(xs) < count:
        candidate = Fraction(i, den)
        if candidate not in xs:
            xs.append(candidate)
        i += 1
    return xs


def umbral_sum_from(n: int, idx: UnifiedIndex, x: Fraction, j_start: int) -> Fraction:
    """The alternating umbral sum with an explicit lower summation limit."""
    total = Fraction(0)
    for j in range(j_start, n + 1):
        sign = -1 if (n - j) % 2 else 1
        total += sign * binomial(n, j) * (1 - x) ** (n - j) * eval_closed(j, idx, x)
    return total


# Each check maps (n, idx, x) -> (lhs, rhs); n_range gives, per index, the
# degrees at which the identity is asserted.


def _check_generating_function(n: int, idx: UnifiedIndex, x: Fraction) -> tuple[Fraction, Fraction]:
    return series_expand(idx, x, n)[n], eval_closed(n, idx, x)


def _check_recurrence(n: int, idx: UnifiedIndex, x: Fraction) -> tuple[Fraction, Fraction]:
    return eval_recurrence(n, idx, x), eval_closed(n, idx, x)


def _derivative_lhs(n: int, idx: UnifiedIndex, x: Fraction) -> Fraction:
    return to_polynomial(n, idx).formal_derivative()(x)


def _check_derivative(n: int, idx: UnifiedIndex, x: Fraction) -> tuple[Fraction, Fraction]:
    k = idx.k
    lower = eval_closed(n - 1, idx.with_k(k - 1), x) if k >= 1 else Fraction(0)
    rhs = n * (lower - eval_closed(n - 1, idx, x))
    return _derivative_lhs(n, idx, x), rhs


def _check_derivative_mixed(n: int, idx: UnifiedIndex, x: Fraction) -> tuple[Fraction, Fraction]:
    # Variant with the subtracted member left at degree n: degrees mismatch.
    k = idx.k
    lower = eval_closed(n - 1, idx.with_k(k - 1), x) if k >= 1 else Fraction(0)
    rhs = n * (lower - eval_closed(n, idx, x))
    return _derivative_lhs(n, idx, x), rhs


def _check_umbral_collapse(n: int, idx: UnifiedIndex, x: Fraction) -> tuple[Fraction, Fraction]:
    return umbral_sum_from(n, idx, x, idx.k), idx.weight * x**idx.k


def _check_umbral_vanishing(n: int, idx: UnifiedIndex, x: Fraction) -> tuple[Fraction, Fraction]:
    return umbral_sum_from(n, idx, x, idx.k), Fraction(0)


def _check_umbral_shifted(n: int, idx: UnifiedIndex, x: Fraction) -> tuple[Fraction, Fraction]:
    # Variant starting the sum at j = k + 1: drops the one term that makes
    # the binomial telescoping close.
    return umbral_sum_from(n, idx, x, idx.k + 1), Fraction(0)


def _check_corollary(n: int, idx: UnifiedIndex, x: Fraction) -> tuple[Fraction, Fraction]:
    k = idx.k
    lhs = binomial(n, k) * eval_closed(n - k, idx, x)
    rhs = binomial(n + k, n) * eval_closed(n, idx, x)
    return lhs, rhs


_IDENTITIES: list[tuple[str, Callable, Callable[[UnifiedIndex, int], range]]] = [
    ("generating-function", _check_generating_function, lambda idx, n_max: range(0, n_max + 1)),
    ("recurrence", _check_recurrence, lambda idx, n_max: range(0, n_max + 1)),
    ("derivative", _check_derivative, lambda idx, n_max: range(1, n_max + 1)),
    ("derivative-as-printed", _check_derivative_mixed, lambda idx, n_max: range(1, n_max + 1)),
    ("umbral-collapse", _check_umbral_collapse, lambda idx, n_max: range(idx.k, min(idx.k, n_max) + 1)),
    ("umbral-vanishing", _check_umbral_vanishing, lambda idx, n_max: range(idx.k + 1, n_max + 1)),
    ("umbral-as-printed", _check_umbral_shifted, lambda idx, n_max: range(idx.k + 1, n_max + 1)),
    # Both sides are swept only where neither is trivially zero by the
    # vanishing convention, i.e. n >= 2k; the claim fails regardless.
    ("corollary", _check_corollary, lambda idx, n_max: range(2 * idx.k, n_max + 1)),
]


def audit_identities(
    n_max: int,
    idx_set: Optional[Sequence[UnifiedIndex]] = None,
    x_samples: Optional[Sequence[Fraction]] = None,
) -> AuditReport:
    """Exactly evaluate both sides of every quoted identity and report.

    For each identity the sweep runs over all degrees up to ``n_max``
    (restricted to where the identity is asserted), every index in
    ``idx_set``, and at least ``n_max + 1`` distinct rational ``x`` values.
    The first failing tuple, in sweep order (n, then index, then x), is
    recorded as the counterexample.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if idx_set is None:
        idx_set = default_index_set()
    if x_samples is None:
        x_samples = default_x_samples(n_max + 1)
    if len(set(x_samples)) < n_max + 1:
        raise ValueError("need at least n_max + 1 distinct x samples")

    findings = []
    for name, check, n_range in _IDENTITIES:
        counterexample = None
        for n in range(0, n_max + 1):
            for idx in idx_set:
                if n not in n_range(idx, n_max):
                    continue
                for x in x_samples:
                    lhs, rhs = check(n, idx, Fraction(x))
                    if lhs != rhs:
                        counterexample = Counterexample(
                            n=n, b=idx.b, s=idx.s, k=idx.k, x=Fraction(x), lhs=lhs, rhs=rhs
                        )
                        break
                if counterexample:
                    break
            if counterexample:
                break
        status = FAILS if counterexample else HOLDS
        findings.append(AuditFinding(name, status, counterexample))
    return AuditReport(n_max=n_max, findings=tuple(findings))
