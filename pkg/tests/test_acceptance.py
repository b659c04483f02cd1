"""Acceptance gate: one test per required criterion, at stated tolerances.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one pass/fail line
per criterion (pytest's own -v listing mirrors the same information).
"""

import json
import random
import subprocess
import sys
import threading
import time
import urllib.request
from fractions import Fraction
from pathlib import Path

import pytest

from unibern import service
from unibern.audit import audit_identities, umbral_sum_from
from unibern.bezier import (
    ControlPolygon,
    cubic_mass_demo,
    curve_eval,
    de_casteljau,
    generalized_curve_eval,
    sample_curve,
)
from unibern.family import (
    UnifiedIndex,
    derivative,
    eval_closed,
    eval_recurrence,
    series_expand,
    to_polynomial,
    umbral_sum,
)
from unibern.interpolation import (
    beta_form,
    contour_coefficient,
    interp_at_negative_integer,
    interp_eval,
    mellin_verify,
)
from unibern.operator import (
    SampledFunction,
    apply_operator,
    convergence_table,
    partition_check,
)
from unibern.special_numbers import connection_identity, stirling2, stirling2_via_series

F = Fraction

GOLDEN = Path(__file__).parent / "golden"

# 21 distinct rationals, mostly inside (0, 1) plus two outside: the checked
# identities are polynomial in x, so off-interval samples are fair game.
X_21 = [F(i, 22) for i in range(1, 20)] + [F(-1, 3), F(7, 5)]

INDEX_GRID = [UnifiedIndex(b, s) for b in (1, 2, 3) for s in (1, 2, 3)]


def _report(name: str) -> None:
    print(f"[ACCEPTANCE] {name}: PASS")


def test_criterion_generating_function_oracle():
    """series_expand coefficient n == eval_closed, n <= 20, exactly."""
    start = time.monotonic()
    assert len(set(X_21)) == 21
    for idx in INDEX_GRID:
        for x in X_21:
            members = series_expand(idx, x, 20)
            for n in range(21):
                assert members[n] == eval_closed(n, idx, x)
    elapsed = time.monotonic() - start
    assert elapsed < 10.0, f"oracle sweep took {elapsed:.1f}s, budget is 10s"
    _report("generating-function oracle (n<=20, b,s<=3, 21 x, exact)")


def test_criterion_recurrence_and_derivative():
    """Recurrence == closed form on the same grid; derivative == formal derivative."""
    for idx in INDEX_GRID:
        for x in X_21:
            for n in range(21):
                assert eval_recurrence(n, idx, x) == eval_closed(n, idx, x)
    for idx in INDEX_GRID:
        for n in range(1, 16):
            assert derivative(n, idx) == to_polynomial(n, idx).formal_derivative()
    _report("recurrence == closed form; derivative == formal derivative (n<=15)")


def test_criterion_umbral_identities():
    """Collapse at n=k, vanishing for n>k (n<=15, k<=6); shifted start is nonzero."""
    indices = [
        UnifiedIndex(b, s)
        for b in range(1, 7)
        for s in range(1, 7)
        if b * s <= 6
    ]
    xs = [F(1, 2), F(2, 7), F(9, 10), F(-1, 3)]
    for idx in indices:
        k = idx.k
        for x in xs:
            assert umbral_sum(k, idx, x) == idx.weight * x**k
        for n in range(k + 1, 16):
            for x in xs:
                assert umbral_sum(n, idx, x) == 0
    # the variant starting at j = k+1 does not vanish; counterexample emitted
    report = audit_identities(10)
    shifted = report.finding("umbral-as-printed")
    assert shifted.status == "FAILS"
    ce = shifted.counterexample
    assert ce is not None and ce.lhs != 0
    idx = UnifiedIndex(ce.b, ce.s, ce.k)
    assert umbral_sum_from(ce.n, idx, ce.x, ce.k + 1) == ce.lhs
    print(
        "[ACCEPTANCE]   shifted-start counterexample: "
        f"n={ce.n} b={ce.b} s={ce.s} x={ce.x} sum={ce.lhs}"
    )
    _report("umbral collapse/vanishing exact (n<=15, k<=6); shifted start nonzero")


def test_criterion_corollary_audit():
    """Corollary FAILS with the concrete counterexample; other identities HOLD."""
    report = audit_identities(10)
    corollary = report.finding("corollary")
    assert corollary.status == "FAILS"
    ce = corollary.counterexample
    assert (ce.n, ce.b * ce.s, ce.x, ce.lhs, ce.rhs) == (2, 1, F(1, 2), F(1), F(3, 2))
    for finding in report.findings:
        if finding.identity.endswith("-as-printed") or finding.identity == "corollary":
            assert finding.status == "FAILS"
        else:
            assert finding.status == "HOLDS", finding.identity
    _report("corollary FAILS (n=2, bs=1, x=1/2: 1 vs 3/2); implemented identities HOLD")


def test_criterion_stirling_bernoulli_connection():
    """Connection identity exact (n<=12, bs<=4, 8 x); both Stirling routes agree."""
    start = time.monotonic()
    xs = [F(1, 9), F(1, 5), F(1, 3), F(1, 2), F(3, 5), F(2, 3), F(7, 8), F(1)]
    assert len(xs) == 8
    indices = [
        UnifiedIndex(b, s)
        for b in range(1, 5)
        for s in range(1, 5)
        if b * s <= 4
    ]
    for idx in indices:
        for n in range(idx.k, 13):
            for x in xs:
                lhs, rhs = connection_identity(n, idx, x)
                assert lhs == rhs
    for n in range(21):
        for v in range(11):
            assert stirling2(n, v) == stirling2_via_series(n, v)
    elapsed = time.monotonic() - start
    assert elapsed < 30.0, f"connection sweep took {elapsed:.1f}s, budget is 30s"
    _report("Stirling/Bernoulli connection exact; stirling2 == series route (n<=20, v<=10)")


def test_criterion_interpolation_routes():
    """Exact at z=-n; beta vs rising-factorial <= 1e-10; Mellin <= 1e-6."""
    for idx in INDEX_GRID:
        for n in range(16):
            for x in (F(0), F(1, 7), F(1, 3), F(1, 2), F(2, 3), F(9, 10)):
                assert interp_at_negative_integer(n, idx, x) == eval_closed(n, idx, x)
    # dual-path agreement on the complex grid
    for idx in (UnifiedIndex(1, 1), UnifiedIndex(1, 2), UnifiedIndex(2, 2)):
        for re in (0.5, 1.0, 2.0, 3.5, 5.0):
            for im in (-3.0, -1.5, 0.0, 1.0, 3.0):
                z = complex(re, im)
                for x in (F(1, 3), F(1, 2), F(9, 10)):
                    direct = interp_eval(z, idx, x)
                    assert direct != 0
                    assert abs(beta_form(z, idx, x) - direct) <= 1e-10 * abs(direct)
    # quadrature agreement on the stated domain
    for idx in (UnifiedIndex(1, 1), UnifiedIndex(1, 2)):
        for re in (1.0, 3.0, 5.0):
            for im in (-2.0, 0.0, 2.0):
                z = complex(re, im)
                for x in (F(1, 4), F(1, 2), F(3, 4)):
                    target = interp_eval(z, idx, x)
                    assert abs(mellin_verify(z, idx, x) - target) <= 1e-6 * abs(target)
    _report("interpolation: exact at z=-n (n<=15); beta<=1e-10; Mellin<=1e-6")


def test_criterion_contour_extraction():
    """Contour coefficients within 1e-8 absolute; node-doubling < 1e-12."""
    for idx in (UnifiedIndex(1, 1), UnifiedIndex(1, 2), UnifiedIndex(2, 1)):
        for n in range(13):
            for x in (F(1, 4), F(1, 2), F(3, 4)):
                value = contour_coefficient(n, idx, x)
                assert abs(value.real - float(eval_closed(n, idx, x))) <= 1e-8
                assert abs(value.imag) <= 1e-10
                m = max(64, 4 * (n + 1))
                a = contour_coefficient(n, idx, x, node_count=m)
                b = contour_coefficient(n, idx, x, node_count=2 * m)
                assert abs(a - b) < 1e-12
    _report("contour extraction <=1e-8 abs (n<=12); doubling witness <1e-12")


def test_criterion_operator():
    """Partition of unity, degree-1 reproduction, variance identity, table."""
    rng = random.Random(8787)
    for n in range(31):
        x = F(rng.randint(-40, 40), rng.randint(1, 40))
        assert partition_check(n, x) == 1
    f_x = SampledFunction(lambda x: x, "x")
    f_x2 = SampledFunction(lambda x: x * x, "x^2")
    for n in range(1, 31):
        for x in (F(0), F(1, 5), F(1, 2), F(4, 5), F(1)):
            assert apply_operator(f_x, n, x) == x
            assert apply_operator(f_x2, n, x) - x * x == x * (1 - x) / n
    grid = [F(i, 8) for i in range(9)]
    rows = convergence_table(f_x2, [10, 20, 40], grid)
    assert rows == [(10, F(1, 40)), (20, F(1, 80)), (40, F(1, 160))]
    _report("operator: partition exact (n<=30); S(x)=x; variance; table 1/40,1/80,1/160")


def test_criterion_bezier():
    """Route agreement on 100 random polygons; demo values; geometry laws."""
    rng = random.Random(42)
    params = [i / 32 for i in range(33)]
    for _ in range(100):
        pts = tuple(
            (rng.uniform(-5, 5), rng.uniform(-5, 5)) for _ in range(rng.randint(2, 11))
        )
        polygon = ControlPolygon(pts)
        for t in params:
            basis = curve_eval(polygon, t)
            unified = generalized_curve_eval(polygon, t)
            iterated = de_casteljau(polygon, t)
            for a, b, c in zip(basis, unified, iterated):
                assert abs(a - b) < 1e-12 and abs(a - c) < 1e-12
        # symmetry + convex-hull box bound on the same polygon
        reversed_polygon = ControlPolygon(tuple(reversed(pts)))
        lo = [min(p[d] for p in pts) for d in range(2)]
        hi = [max(p[d] for p in pts) for d in range(2)]
        for t in (0.25, 0.5, 0.75):
            forward = de_casteljau(polygon, t)
            backward = de_casteljau(reversed_polygon, 1.0 - t)
            assert all(abs(a - b) < 1e-12 for a, b in zip(forward, backward))
            assert all(lo[d] - 1e-9 <= forward[d] <= hi[d] + 1e-9 for d in range(2))
    # affine invariance on random polygons
    import numpy as np

    matrix = np.array([[0.8, -0.6], [0.6, 0.8]])
    shift = np.array([3.0, -2.0])
    for _ in range(20):
        pts = tuple((rng.uniform(-5, 5), rng.uniform(-5, 5)) for _ in range(5))
        polygon = ControlPolygon(pts)
        mapped = ControlPolygon(tuple(tuple(matrix @ np.asarray(p) + shift) for p in pts))
        for t in (0.1, 0.5, 0.9):
            direct = matrix @ np.asarray(de_casteljau(polygon, t)) + shift
            assert np.allclose(direct, de_casteljau(mapped, t), atol=1e-10, rtol=0)
    demo = ControlPolygon(((0.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 0.0)))
    assert de_casteljau(demo, 0.5) == (0.5, 0.75)
    point, masses = cubic_mass_demo((0, 0), (0, 1), (1, 1), (1, 0), 0.5)
    assert masses == (0.125, 0.375, 0.375, 0.125)
    assert point == (0.5, 0.75)
    _report("bezier: 100-polygon route agreement <=1e-12; demo values; geometry laws")


def _run_cli(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "unibern", *args],
        capture_output=True,
        text=True,
        timeout=120,
    )


def test_criterion_cli_and_service():
    """Golden CLI outputs and documented service bodies."""
    result = _run_cli("eval", "--n", "2", "--b", "1", "--s", "1", "--x", "1/2")
    assert result.returncode == 0
    assert result.stdout == (GOLDEN / "eval_basic.json").read_text() == '{"value":"1/2"}\n'

    result = _run_cli("audit", "--nmax", "10")
    assert result.returncode == 0
    assert result.stdout == (GOLDEN / "audit_nmax10.json").read_text()
    by_name = {e["identity"]: e for e in json.loads(result.stdout)}
    assert by_name["corollary"]["status"] == "FAILS"

    result = _run_cli(
        "bezier", "--points", "0,0:0,1:1,1:1,0", "--samples", "33", "--format", "svg"
    )
    assert result.returncode == 0
    assert result.stdout == (GOLDEN / "cubic_demo.svg").read_text()

    server = service.make_server(port=0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    try:
        host, port = server.server_address[:2]
        base = f"http://{host}:{port}"
        with urllib.request.urlopen(f"{base}/basis?n=2&x=0.5", timeout=10) as r:
            assert json.loads(r.read()) == [0.25, 0.5, 0.25]
        with urllib.request.urlopen(f"{base}/unified?n=2&b=1&s=1&x=1/2", timeout=10) as r:
            assert json.loads(r.read()) == {"decimal": "0.5", "exact": "1/2"}
        payload = json.dumps(
            {"control_points": [[0, 0], [0, 1], [1, 1], [1, 0]], "samples": 3}
        ).encode()
        request = urllib.request.Request(
            f"{base}/curve", data=payload, headers={"Content-Type": "application/json"}
        )
        with urllib.request.urlopen(request, timeout=10) as r:
            doc = json.loads(r.read())
        assert doc["samples"][1]["p"] == [0.5, 0.75]
    finally:
        server.shutdown()
        server.server_close()
        thread.join(timeout=5)
    _report("CLI golden outputs and service bodies match the documented values")
