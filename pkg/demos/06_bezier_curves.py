"""
Bezier curves as moving centers of mass
=======================================

Four masses (1-x)^3, 3x(1-x)^2, 3x^2(1-x), x^3 always sum to 1; letting x
run over [0, 1] sweeps their center of mass along a cubic Bezier curve.
The library evaluates curves three independent ways and exports geometry
as SVG or JSON.
"""

from pathlib import Path

from unibern import (
    ControlPolygon,
    cubic_mass_demo,
    curve_eval,
    de_casteljau,
    export_json,
    export_svg,
    generalized_curve_eval,
    sample_curve,
)

polygon = ControlPolygon(((0.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 0.0)))

# the midpoint of the classic demo cubic: (P0 + 3 P1 + 3 P2 + P3)/8
point, masses = cubic_mass_demo(*polygon.points, 0.5)
print("masses at x=1/2:", masses)
print("center of mass:", point)

# three evaluation routes, same answer
for t in (0.25, 0.5, 0.75):
    a = curve_eval(polygon, t)
    b = generalized_curve_eval(polygon, t)
    c = de_casteljau(polygon, t)
    print(f"t={t}: basis {a}  normalized {b}  de Casteljau {c}")

# sample and export
samples = sample_curve(polygon, 33)
svg = export_svg(samples, polygon)
out = Path("cubic_demo.svg")
out.write_text(svg)
print(f"wrote {out} ({len(svg)} bytes)")
print("JSON head:", export_json(samples, polygon)[:80], "...")
