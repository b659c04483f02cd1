"""unibern: exact and numeric tools for a weighted Bernstein polynomial family.

The family member of degree n with basis index k and weight 2**(b*(1-s)) is

    member(n, k, x) = weight * C(n, k) * x**k * (1-x)**(n-k),

the classic Bernstein basis polynomial when s = 1.  The package provides the
family's exponential generating series (the independent oracle for the closed
form), its recurrence/derivative/umbral calculus with a mechanical identity
audit, the Stirling/higher-order-Bernoulli convolution, a complex
interpolation of the members with Mellin and contour cross-checks, the
positive sampling operator built on the normalized basis, and Bezier curves
over the same blending functions.

Exact paths use ``fractions.Fraction`` end to end; floating point appears
only in interpolation numerics and curve geometry, always with an exact or
closed-form target to compare against.
"""

from .exact import (
    ExactRational,
    TruncatedSeries,
    binomial,
    series_exp_linear,
    series_mul,
    series_pow,
    series_reciprocal,
)
from .family import (
    PolynomialInX,
    UnifiedIndex,
    derivative,
    eval_closed,
    eval_recurrence,
    series_expand,
    to_polynomial,
    umbral_sum,
)
from .audit import AuditFinding, AuditReport, Counterexample, audit_identities, default_index_set
from .special_numbers import (
    HigherBernoulliEvaluator,
    StirlingTable,
    bernoulli_higher,
    connection_identity,
    stirling2,
    stirling2_via_series,
)
from .interpolation import (
    DivergenceError,
    QuadratureConfig,
    TailBoundError,
    beta_form,
    contour_coefficient,
    interp_at_negative_integer,
    interp_eval,
    mellin_verify,
    rising_factorial,
)
from .operator import (
    SampledFunction,
    apply_operator,
    convergence_table,
    g_basis,
    partition_check,
    table_to_csv,
)
from .bezier import (
    ControlPolygon,
    CurveSamples,
    cubic_mass_demo,
    curve_eval,
    de_casteljau,
    export_json,
    export_svg,
    generalized_curve_eval,
    sample_curve,
)

__version__ = "0.1.0"

__all__ = [
    "ExactRational",
    "TruncatedSeries",
    "binomial",
    "series_exp_linear",
    "series_mul",
    "series_pow",
    "series_reciprocal",
    "PolynomialInX",
    "UnifiedIndex",
    "derivative",
    "eval_closed",
    "eval_recurrence",
    "series_expand",
    "to_polynomial",
    "umbral_sum",
    "AuditFinding",
    "AuditReport",
    "Counterexample",
    "audit_identities",
    "default_index_set",
    "HigherBernoulliEvaluator",
    "StirlingTable",
    "bernoulli_higher",
    "connection_identity",
    "stirling2",
    "stirling2_via_series",
    "DivergenceError",
    "QuadratureConfig",
    "TailBoundError",
    "beta_form",
    "contour_coefficient",
    "interp_at_negative_integer",
    "interp_eval",
    "mellin_verify",
    "rising_factorial",
    "SampledFunction",
    "apply_operator",
    "convergence_table",
    "g_basis",
    "partition_check",
    "table_to_csv",
    "ControlPolygon",
    "CurveSamples",
    "cubic_mass_demo",
    "curve_eval",
    "de_casteljau",
    "export_json",
    "export_svg",
    "generalized_curve_eval",
    "sample_curve",
]
