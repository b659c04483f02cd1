"""Local JSON service over HTTP exposing the curve and basis endpoints.

Stateless and deterministic: every response is a pure function of the
request.  Exact rationals cross this boundary as strings ("3/16"), curve
geometry as doubles.  CORS is allowed for localhost origins so a browser
frontend served from another local port can call in.

Routes
------
POST /curve    {"control_points": [[x, y], ...], "samples": N}
               -> {"control_points": [...], "samples": [{"t": t, "p": [x, y]}, ...]}
GET  /basis    ?n=&x=          -> [g(n, 0, x), ..., g(n, n, x)] as doubles
GET  /unified  ?n=&b=&s=&x=[&k=] -> {"decimal": "...", "exact": "p/q"}
"""

from __future__ import annotations

import json
import logging
from fractions import Fraction
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .bezier import ControlPolygon, sample_curve
from .family import UnifiedIndex, eval_closed
from .operator import g_basis

__all__ = ["make_server", "serve_forever", "DEFAULT_PORT"]

DEFAULT_PORT = 8787

log = logging.getLogger(__name__)


class RequestError(ValueError):
    """Client-side error; maps to a 400 response."""


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q', an integer, or a decimal literal as an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise RequestError(f"not a rational literal: {text!r}") from exc


def _require_int(params: dict, key: str, minimum: int | None = None) -> int:
    if key not in params:
        raise RequestError(f"missing query parameter {key!r}")
    try:
        value = int(params[key][0])
    except ValueError as exc:
        raise RequestError(f"parameter {key!r} must be an integer") from exc
    if minimum is not None and value < minimum:
        raise RequestError(f"parameter {key!r} must be >= {minimum}")
    return value


def handle_basis(params: dict) -> list[float]:
    n = _require_int(params, "n", minimum=0)
    if "x" not in params:
        raise RequestError("missing query parameter 'x'")
    x = parse_rational(params["x"][0])
    return [float(g_basis(n, j, x)) for j in range(n + 1)]


def handle_unified(params: dict) -> dict:
    n = _require_int(params, "n", minimum=0)
    b = _require_int(params, "b", minimum=1)
    s = _require_int(params, "s", minimum=1)
    if "x" not in params:
        raise RequestError("missing query parameter 'x'")
    x = parse_rational(params["x"][0])
    k = _require_int(params, "k", minimum=0) if "k" in params else -1
    idx = UnifiedIndex(b, s, k)
    value = eval_closed(n, idx, x)
    return {"decimal": str(float(value)), "exact": str(value)}


def handle_curve(body: bytes) -> dict:
    try:
        payload = json.loads(body.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise RequestError(f"request body is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise RequestError("request body must be a JSON object")
    if "control_points" not in payload:
        raise RequestError("missing field 'control_points'")
    count = payload.get("samples", 33)
    if not isinstance(count, int) or count < 2:
        raise RequestError("field 'samples' must be an integer >= 2")
    try:
        polygon = ControlPolygon(tuple(tuple(p) for p in payload["control_points"]))
    except (TypeError, ValueError) as exc:
        raise RequestError(f"bad control points: {exc}") from exc
    samples = sample_curve(polygon, count)
    return {
        "control_points": [list(p) for p in polygon.points],
        "samples": [
            {"t": t, "p": list(p)} for t, p in zip(samples.parameters, samples.points)
        ],
    }


_ALLOWED_ORIGIN_PREFIXES = ("http://localhost", "http://127.0.0.1")


class _Handler(BaseHTTPRequestHandler):
    server_version = "unibern/0.1"

    def log_message(self, fmt: str, *args) -> None:  # quiet by default
        log.debug("%s - %s", self.address_string(), fmt % args)

    def _cors_headers(self) -> list[tuple[str, str]]:
        origin = self.headers.get("Origin", "")
        if origin.startswith(_ALLOWED_ORIGIN_PREFIXES):
            return [
                ("Access-Control-Allow-Origin", origin),
                ("Access-Control-Allow-Methods", "GET, POST, OPTIONS"),
                ("Access-Control-Allow-Headers", "Content-Type"),
            ]
        return []

    def _send_json(self, status: int, obj) -> None:
        body = (json.dumps(obj) + "\n").encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        for key, value in self._cors_headers():
            self.send_header(key, value)
        self.end_headers()
        self.wfile.write(body)

    def do_OPTIONS(self) -> None:  # CORS preflight
        self.send_response(204)
        for key, value in self._cors_headers():
            self.send_header(key, value)
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self) -> None:
        url = urlparse(self.path)
        params = parse_qs(url.query)
        try:
            if url.path == "/basis":
                self._send_json(200, handle_basis(params))
            elif url.path == "/unified":
                self._send_json(200, handle_unified(params))
            else:
                self._send_json(404, {"error": f"unknown route {url.path}"})
        except RequestError as exc:
            self._send_json(400, {"error": str(exc)})
        except Exception as exc:  # pragma: no cover - defensive
            log.exception("internal error")
            self._send_json(500, {"error": f"internal error: {exc}"})

    def do_POST(self) -> None:
        url = urlparse(self.path)
        try:
            if url.path == "/curve":
                length = int(self.headers.get("Content-Length", "0"))
                body = self.rfile.read(length)
                self._send_json(200, handle_curve(body))
            else:
                self._send_json(404, {"error": f"unknown route {url.path}"})
        except RequestError as exc:
            self._send_json(400, {"error": str(exc)})
        except Exception as exc:  # pragma: no cover - defensive
            log.exception("internal error")
            self._send_json(500, {"error": f"internal error: {exc}"})


def make_server(port: int = DEFAULT_PORT, host: str = "127.0.0.1") -> ThreadingHTTPServer:
    """Bind the service; ``port=0`` picks a free port (useful in tests)."""
    return ThreadingHTTPServer((host, port), _Handler)


def serve_forever(port: int = DEFAULT_PORT, host: str = "127.0.0.1") -> None:
    server = make_server(port, host)
    actual = server.server_address[1]
    print(f"serving on http://{host}:{actual}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
