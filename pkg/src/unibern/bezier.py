"""Bezier curves over the Bernstein blending functions.

Three evaluation routes are kept deliberately separate so they can be
cross-checked: the basis form (blending-function weighted sum), the same sum
through the normalized-basis code path used by the operator module, and
repeated linear interpolation (de Casteljau).  Curve geometry is plain
double precision; exactness lives upstream in the basis identities.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .operator import g_basis

__all__ = [
    "ControlPolygon",
    "CurveSamples",
    "curve_eval",
    "generalized_curve_eval",
    "de_casteljau",
    "cubic_mass_demo",
    "sample_curve",
    "export_svg",
    "export_json",
]


@dataclass(frozen=True)
class ControlPolygon:
    """Ordered control points, shape (n+1, d) with d in {2, 3}."""

    points: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        pts = tuple(tuple(float(c) for c in p) for p in self.points)
        if len(pts) < 2:
            raise ValueError("a control polygon needs at least 2 points")
        dim = len(pts[0])
        if dim not in (2, 3):
            raise ValueError(f"points must be 2D or 3D, got dimension {dim}")
        if any(len(p) != dim for p in pts):
            raise ValueError("all control points must share one dimension")
        if not all(math.isfinite(c) for p in pts for c in p):
            raise ValueError("control point coordinates must be finite")
        object.__setattr__(self, "points", pts)

    @property
    def degree(self) -> int:
        return len(self.points) - 1

    @property
    def dimension(self) -> int:
        return len(self.points[0])

    def as_array(self) -> np.ndarray:
        return np.asarray(self.points, dtype=float)


@dataclass(frozen=True)
class CurveSamples:
    """Strictly increasing parameters in [0, 1] and the matching points."""

    parameters: tuple[float, ...]
    points: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        if len(self.parameters) != len(self.points):
            raise ValueError("parameters and points must have equal length")
        if any(b <= a for a, b in zip(self.parameters, self.parameters[1:])):
            raise ValueError("parameters must be strictly increasing")


def _check_param(x: float) -> float:
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"curve parameter must lie in [0, 1], got {x}")
    return x


def curve_eval(polygon: ControlPolygon, x: float) -> tuple[float, ...]:
    """Basis-form evaluation: sum_k P_k * C(n,k) x**k (1-x)**(n-k)."""
    x = _check_param(x)
    n = polygon.degree
    pts = polygon.as_array()
    weights = np.array(
        [math.comb(n, k) * x**k * (1.0 - x) ** (n - k) for k in range(n + 1)]
    )
    return tuple(float(c) for c in weights @ pts)


def generalized_curve_eval(polygon: ControlPolygon, x: float) -> tuple[float, ...]:
    """Evaluation through the normalized-basis code path.

    Blending weights are computed exactly at the (dyadic) rational nearest
    the requested parameter and rounded once, so the result matches
    :func:`curve_eval` to well below 1e-12 per coordinate.
    """
    x = _check_param(x)
    n = polygon.degree
    xq = Fraction(x)  # exact binary value of the double
    weights = np.array([float(g_basis(n, k, xq)) for k in range(n + 1)])
    return tuple(float(c) for c in weights @ polygon.as_array())


def de_casteljau(polygon: ControlPolygon, x: float) -> tuple[float, ...]:
    """Repeated linear interpolation of the control points."""
    x = float(x)
    pts = polygon.as_array()
    n = polygon.degree
    for _ in range(n):
        pts = (1.0 - x) * pts[:-1] + x * pts[1:]
    return tuple(float(c) for c in pts[0])


def cubic_mass_demo(
    p0: Sequence[float],
    p1: Sequence[float],
    p2: Sequence[float],
    p3: Sequence[float],
    x: float,
) -> tuple[tuple[float, ...], tuple[float, float, float, float]]:
    """Center of mass of four points under the cubic blending masses.

    The masses ((1-x)**3, 3x(1-x)**2, 3x**2(1-x), x**3) sum to 1 for every
    x, so the swept point is the cubic Bezier curve of the four points.
    Returns (point, masses).
    """
    x = _check_param(x)
    masses = (
        (1.0 - x) ** 3,
        3.0 * x * (1.0 - x) ** 2,
        3.0 * x**2 * (1.0 - x),
        x**3,
    )
    pts = np.asarray([p0, p1, p2, p3], dtype=float)
    point = np.asarray(masses) @ pts
    return tuple(float(c) for c in point), masses


def sample_curve(polygon: ControlPolygon, count: int) -> CurveSamples:
    """``count`` uniformly spaced parameters, points by de Casteljau."""
    if count < 2:
        raise ValueError(f"need at least 2 samples, got {count}")
    params = tuple(i / (count - 1) for i in range(count))
    points = tuple(de_casteljau(polygon, t) for t in params)
    return CurveSamples(parameters=params, points=points)


def export_svg(samples: CurveSamples, polygon: ControlPolygon) -> str:
    """Standalone SVG: the sampled curve as a polyline plus control markers.

    Output is a deterministic function of the input bytes: coordinates are
    printed with exactly 6 decimal places and nothing else varies.
    """
    if not samples.points:
        raise ValueError("cannot export empty samples")
    if polygon.dimension != 2:
        raise ValueError("SVG export is 2D only")
    xs = [p[0] for p in samples.points] + [p[0] for p in polygon.points]
    ys = [p[1] for p in samples.points] + [p[1] for p in polygon.points]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    pad = 0.1 * max(max_x - min_x, max_y - min_y, 1e-9)
    view = (min_x - pad, min_y - pad, (max_x - min_x) + 2 * pad, (max_y - min_y) + 2 * pad)

    def fmt(v: float) -> str:
        return f"{v:.6f}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">'.format(
            *(fmt(v) for v in view)
        ),
        '  <g stroke="#888888" stroke-width="{}" fill="none">'.format(fmt(0.01 * view[2])),
        '    <polyline points="{}"/>'.format(
            " ".join(f"{fmt(p[0])},{fmt(p[1])}" for p in polygon.points)
        ),
        "  </g>",
        '  <polyline fill="none" stroke="#0057b7" stroke-width="{}" points="{}"/>'.format(
            fmt(0.015 * view[2]),
            " ".join(f"{fmt(p[0])},{fmt(p[1])}" for p in samples.points),
        ),
    ]
    marker_r = fmt(0.02 * view[2])
    for p in polygon.points:
        lines.append(
            f'  <circle cx="{fmt(p[0])}" cy="{fmt(p[1])}" r="{marker_r}" fill="#d62828"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _sig15(v: float) -> float:
    return float(f"{v:.15g}")


def export_json(samples: CurveSamples, polygon: ControlPolygon) -> str:
    """JSON document with control points and (t, point) samples, 15 significant digits."""
    doc = {
        "control_points": [[_sig15(c) for c in p] for p in polygon.points],
        "samples": [
            {"t": _sig15(t), "p": [_sig15(c) for c in p]}
            for t, p in zip(samples.parameters, samples.points)
        ],
    }
    return json.dumps(doc, separators=(",", ":"))
