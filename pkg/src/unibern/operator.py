"""Normalized Bernstein basis, the positive approximation operator, and
convergence diagnostics.

The normalized basis ``g(n, j, x) = C(n,j) x**j (1-x)**(n-j)`` is the
family member rescaled so its weight drops out; summed over j it is a
partition of unity, which makes the sampling operator

    S_n(f)(x) = sum_j f(j/n) * g(n, j, x)

linear, positive, and endpoint-interpolating.  Operator evaluation is exact
whenever the sampled function returns rationals; double-valued samplers
produce doubles.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .exact import RationalLike, binomial

__all__ = [
    "SampledFunction",
    "g_basis",
    "partition_check",
    "apply_operator",
    "convergence_table",
    "table_to_csv",
]

Scalar = Union[Fraction, float]


@dataclass(frozen=True)
class SampledFunction:
    """A function on [0, 1] paired with a display label.

    The evaluator may return exact rationals (identity checks) or doubles
    (practical tables); operator results follow the evaluator's type.
    """

    evaluator: Callable[[Fraction], Scalar]
    label: str

    def __call__(self, x: Fraction) -> Scalar:
        return self.evaluator(x)


def g_basis(n: int, j: int, x: RationalLike) -> Fraction:
    """Normalized basis value C(n,j) * x**j * (1-x)**(n-j); 0 off range."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if j < 0 or j > n:
        return Fraction(0)
    x = Fraction(x)
    return binomial(n, j) * x**j * (1 - x) ** (n - j)


def partition_check(n: int, x: RationalLike) -> Fraction:
    """Sum of the normalized basis over j; identically 1 for every x."""
    x = Fraction(x)
    return sum((g_basis(n, j, x) for j in range(n + 1)), Fraction(0))


def apply_operator(f: SampledFunction | Callable[[Fraction], Scalar], n: int, x: RationalLike) -> Scalar:
    """The sampling operator sum_j f(j/n) * g(n, j, x).

    ``f`` may be a :class:`SampledFunction` or any callable on [0, 1].
    Raises ValueError if the sampler fails at one of the nodes j/n.
    """
    if n < 1:
        raise ValueError(f"the operator needs n >= 1, got {n}")
    x = Fraction(x)
    if x < 0 or x > 1:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    total: Scalar = Fraction(0)
    for j in range(n + 1):
        node = Fraction(j, n)
        try:
            sample = f(node)
        except Exception as exc:
            raise ValueError(f"sampled function undefined at node {node}") from exc
        if sample is None:
            raise ValueError(f"sampled function undefined at node {node}")
        total = total + sample * g_basis(n, j, x)
    return total


def convergence_table(
    f: SampledFunction | Callable[[Fraction], Scalar],
    n_values: Sequence[int],
    grid: Sequence[RationalLike],
) -> list[tuple[int, Scalar]]:
    """Rows (n, sup-error over grid) for the operator against f itself."""
    if not grid:
        raise ValueError("grid must be nonempty")
    points = [Fraction(g) for g in grid]
    rows: list[tuple[int, Scalar]] = []
    for n in n_values:
        sup: Scalar = Fraction(0)
        for x in points:
            err = abs(apply_operator(f, n, x) - f(x))
            if err > sup:
                sup = err
        rows.append((n, sup))
    return rows


def table_to_csv(rows: Sequence[tuple[int, Scalar]]) -> str:
    """CSV rendering: header ``n,sup_error``, errors at 12 significant digits."""
    out = io.StringIO()
    out.write("n,sup_error\n")
    for n, err in rows:
        out.write(f"{n},{float(err):.12g}\n")
    return out.getvalue()
