"""Command-line entry point: every library operation behind one binary.

Exact subcommands print rationals as ``p/q`` strings that re-parse to the
identical value; geometry subcommands print doubles.  Exit codes: 0 success,
1 input error (bad flag, malformed rational, out-of-range argument),
2 numeric-contract violation (a quadrature or contour result disagreeing
with its closed-form target beyond tolerance).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import service
from .audit import audit_identities
from .bezier import ControlPolygon, export_json, export_svg, sample_curve
from .family import UnifiedIndex, eval_closed, series_expand
from .interpolation import (
    QuadratureConfig,
    TailBoundError,
    contour_coefficient,
    interp_at_negative_integer,
    interp_eval,
    mellin_verify,
)
from .operator import SampledFunction, convergence_table, table_to_csv

__all__ = ["main"]

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CONTRACT = 2

MELLIN_TOLERANCE = 1e-6
CONTOUR_TOLERANCE = 1e-8


class CliInputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the contract reserves 2 for numeric
    # violations, so route usage errors through exit code 1 instead.
    def error(self, message: str) -> None:
        raise CliInputError(message)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"expected a rational like '3/16' or an integer, got {text!r}"
        )


def _complex_flag(text: str) -> complex:
    try:
        return complex(text.strip().replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a complex literal like '1.5' or '1+2j', got {text!r}"
        )


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _rational_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(part) for part in text.split(",") if part]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}")


def _points_flag(text: str) -> list[tuple[float, ...]]:
    try:
        points = []
        for chunk in text.split(":"):
            coords = tuple(float(c) for c in chunk.split(","))
            points.append(coords)
        return points
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected points like '0,0:0,1:1,1:1,0', got {text!r}"
        )


def _add_index_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--b", type=int, required=True, help="first family parameter (>= 1)")
    p.add_argument("--s", type=int, required=True, help="second family parameter (>= 1)")
    p.add_argument("--k", type=int, default=-1, help="basis index (default b*s)")


def _index_from(args: argparse.Namespace) -> UnifiedIndex:
    try:
        return UnifiedIndex(args.b, args.s, args.k)
    except ValueError as exc:
        raise CliInputError(str(exc))


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


_NAMED_FUNCTIONS = {
    "one": SampledFunction(lambda x: Fraction(1), "1"),
    "x": SampledFunction(lambda x: x, "x"),
    "x2": SampledFunction(lambda x: x * x, "x^2"),
}


def resolve_port(explicit: int | None) -> int:
    """--port wins; otherwise BERNSTEIN_PORT; otherwise the default 8787."""
    if explicit is not None:
        return explicit
    env = os.environ.get("BERNSTEIN_PORT")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise CliInputError(f"BERNSTEIN_PORT is not an integer: {env!r}")
    return service.DEFAULT_PORT


def build_parser() -> _Parser:
    parser = _Parser(prog="unibern", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="closed-form family member value")
    p.add_argument("--n", type=int, required=True)
    _add_index_flags(p)
    p.add_argument("--x", type=_rational, required=True)

    p = sub.add_parser("series", help="family members 0..order from the generating series")
    _add_index_flags(p)
    p.add_argument("--x", type=_rational, required=True)
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("audit", help="exact identity audit with counterexamples")
    p.add_argument("--nmax", type=int, required=True)

    p = sub.add_parser("interp", help="interpolation value at complex z or exactly at z=-n")
    _add_index_flags(p)
    p.add_argument("--x", type=_rational, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--z", type=_complex_flag, help="complex evaluation point")
    group.add_argument("--n", type=int, help="exact evaluation at z=-n")

    p = sub.add_parser("mellin", help="Mellin quadrature cross-check of the interpolation")
    _add_index_flags(p)
    p.add_argument("--x", type=_rational, required=True)
    p.add_argument("--z", type=_complex_flag, required=True)
    p.add_argument("--nodes", type=int, default=64)
    p.add_argument("--upper", type=float, default=None)

    p = sub.add_parser("contour", help="family member as a Cauchy contour coefficient")
    p.add_argument("--n", type=int, required=True)
    _add_index_flags(p)
    p.add_argument("--x", type=_rational, required=True)
    p.add_argument("--radius", type=float, default=1.0)
    p.add_argument("--nodes", type=int, default=64)

    p = sub.add_parser("operator", help="operator convergence table for a named function")
    p.add_argument("--f", choices=sorted(_NAMED_FUNCTIONS), required=True)
    p.add_argument("--n", type=_int_list, required=True, help="comma-separated degrees")
    p.add_argument(
        "--grid",
        type=_rational_list,
        default=[Fraction(i, 8) for i in range(9)],
        help="comma-separated rational sample points (default i/8)",
    )
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("bezier", help="sample a Bezier curve; emit JSON or SVG")
    p.add_argument("--points", type=_points_flag, required=True)
    p.add_argument("--samples", type=int, default=33)
    p.add_argument("--format", choices=["json", "svg"], default="json")

    p = sub.add_parser("serve", help="serve the JSON API over local HTTP")
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--host", default="127.0.0.1")

    return parser


def _run(args: argparse.Namespace) -> int:
    cmd = args.command

    if cmd == "eval":
        if args.n < 0:
            raise CliInputError("--n must be >= 0")
        value = eval_closed(args.n, _index_from(args), args.x)
        _emit({"value": str(value)})

    elif cmd == "series":
        if args.order < 0:
            raise CliInputError("--order must be >= 0")
        coeffs = series_expand(_index_from(args), args.x, args.order)
        _emit({"coefficients": [str(c) for c in coeffs]})

    elif cmd == "audit":
        if args.nmax < 1:
            raise CliInputError("--nmax must be >= 1")
        report = audit_identities(args.nmax)
        sys.stdout.write(report.to_json() + "\n")

    elif cmd == "interp":
        idx = _index_from(args)
        try:
            if args.n is not None:
                if args.n < 0:
                    raise CliInputError("--n must be >= 0")
                value = interp_at_negative_integer(args.n, idx, args.x)
                _emit({"value": str(value), "decimal": str(float(value))})
            else:
                w = interp_eval(args.z, idx, args.x)
                _emit({"real": w.real, "imag": w.imag})
        except ValueError as exc:
            raise CliInputError(str(exc))

    elif cmd == "mellin":
        idx = _index_from(args)
        cfg = QuadratureConfig(node_count=args.nodes, upper_limit=args.upper)
        try:
            quad = mellin_verify(args.z, idx, args.x, cfg)
            target = interp_eval(args.z, idx, args.x)
        except (ValueError, TailBoundError) as exc:
            # a user-chosen truncation that cannot meet the tail bound is an
            # input problem, not a numeric-contract violation
            raise CliInputError(str(exc))
        scale = max(abs(target), 1e-300)
        rel = abs(quad - target) / scale
        _emit(
            {
                "quadrature": [quad.real, quad.imag],
                "closed_form": [target.real, target.imag],
                "rel_diff": rel,
            }
        )
        if rel > MELLIN_TOLERANCE:
            return EXIT_CONTRACT

    elif cmd == "contour":
        idx = _index_from(args)
        try:
            value = contour_coefficient(args.n, idx, args.x, args.radius, args.nodes)
        except ValueError as exc:
            raise CliInputError(str(exc))
        target = eval_closed(args.n, idx, args.x)
        err = abs(value.real - float(target)) + abs(value.imag)
        _emit(
            {
                "real": value.real,
                "imag": value.imag,
                "closed_form": str(target),
                "abs_error": err,
            }
        )
        if err > CONTOUR_TOLERANCE:
            return EXIT_CONTRACT

    elif cmd == "operator":
        f = _NAMED_FUNCTIONS[args.f]
        if any(n < 1 for n in args.n):
            raise CliInputError("--n entries must be >= 1")
        try:
            rows = convergence_table(f, args.n, args.grid)
        except ValueError as exc:
            raise CliInputError(str(exc))
        if args.format == "csv":
            sys.stdout.write(table_to_csv(rows))
        else:
            _emit({"rows": [{"n": n, "sup_error": float(e)} for n, e in rows]})

    elif cmd == "bezier":
        try:
            polygon = ControlPolygon(tuple(args.points))
            samples = sample_curve(polygon, args.samples)
            if args.format == "svg":
                document = export_svg(samples, polygon)
            else:
                document = export_json(samples, polygon) + "\n"
        except ValueError as exc:
            raise CliInputError(str(exc))
        sys.stdout.write(document)

    elif cmd == "serve":
        service.serve_forever(port=resolve_port(args.port), host=args.host)

    else:  # pragma: no cover - argparse enforces the choices
        raise CliInputError(f"unknown command {cmd!r}")

    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
