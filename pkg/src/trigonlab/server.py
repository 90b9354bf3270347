"""Stateless evaluate endpoint: a pure request handler plus a local HTTP server.

The wire format is JSON.  Request fields: source (program text), overrides
(map of free-point name to [x, y]), viewport (optional: {center: [x, y],
half_extent, aspect}).  Response fields: schema (always 1), scene,
free_points ([[name, x, y], ...]), diagnostics ([{line, column, message,
severity}, ...]), fitted_viewport.  Program failures of any kind come back
as diagnostics alongside a partial or empty scene; a malformed request gets
a schema-error response in the same shape.  handle_evaluate keeps no state,
so byte-identical requests yield byte-identical responses.
"""

from __future__ import annotations

import json
import math
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .dsl import parse_source, run
from .errors import EmptyScene, SourceError
from .kernel import Point
from .render import Viewport, fit_viewport
from .scene import Scene, scene_to_jsonable

SCHEMA_VERSION = 1
DEFAULT_ASPECT = 1.0
DEFAULT_PADDING = 0.05
DEFAULT_HOST = "127.0.0.1"
DEFAULT_PORT = 8039


def viewport_to_jsonable(viewport: Viewport) -> dict:
    return {
        "center": [viewport.center.x, viewport.center.y],
        "half_extent": viewport.half_extent,
        "aspect": viewport.aspect,
    }


class _SchemaError(ValueError):
    pass


def _wire_number(value: object, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise _SchemaError(f"{what} must be a number")
    if not math.isfinite(value):
        raise _SchemaError(f"{what} must be finite")
    return float(value)


def _wire_pair(value: object, what: str) -> tuple[float, float]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise _SchemaError(f"{what} must be a pair of numbers")
    return (_wire_number(value[0], what), _wire_number(value[1], what))


def _wire_viewport(value: object) -> Viewport:
    if not isinstance(value, dict):
        raise _SchemaError("viewport must be an object")
    extra = set(value) - {"center", "half_extent", "aspect"}
    if extra:
        raise _SchemaError(f"viewport has unknown fields: {', '.join(sorted(extra))}")
    if "center" not in value or "half_extent" not in value:
        raise _SchemaError("viewport needs center and half_extent")
    center = _wire_pair(value["center"], "viewport center")
    half = _wire_number(value["half_extent"], "viewport half_extent")
    aspect = _wire_number(value.get("aspect", DEFAULT_ASPECT), "viewport aspect")
    try:
        return Viewport(Point(*center), half, aspect)
    except ValueError as exc:
        raise _SchemaError(str(exc)) from None


def _wire_overrides(value: object) -> dict[str, tuple[float, float]]:
    if not isinstance(value, dict):
        raise _SchemaError("overrides must be an object mapping names to pairs")
    out = {}
    for name, pair in value.items():
        if not isinstance(name, str):
            raise _SchemaError("override names must be strings")
        out[name] = _wire_pair(pair, f"override {name!r}")
    return out


def _response(
    scene: Scene,
    free_points: tuple[tuple[str, float, float], ...],
    diagnostics: list[dict],
    viewport: Viewport | None,
) -> dict:
    if viewport is None:
        try:
            viewport = fit_viewport(scene, DEFAULT_ASPECT, DEFAULT_PADDING)
        except EmptyScene:
            viewport = Viewport(Point(0.0, 0.0), 1.0, DEFAULT_ASPECT)
    return {
        "schema": SCHEMA_VERSION,
        "scene": scene_to_jsonable(scene),
        "free_points": [[name, x, y] for name, x, y in free_points],
        "diagnostics": diagnostics,
        "fitted_viewport": viewport_to_jsonable(viewport),
    }


def _schema_error(message: str) -> dict:
    diagnostic = {"line": 0, "column": 0, "message": f"schema error: {message}", "severity": "error"}
    return _response(Scene(), (), [diagnostic], Viewport(Point(0.0, 0.0), 1.0, DEFAULT_ASPECT))


def handle_evaluate(request: object) -> dict:
    """Evaluate one request; pure, stateless, and total over JSON values."""
    if not isinstance(request, dict):
        return _schema_error("request body must be an object")
    extra = set(request) - {"source", "overrides", "viewport", "schema"}
    if extra:
        return _schema_error(f"unknown fields: {', '.join(sorted(extra))}")
    if "schema" in request and request["schema"] != SCHEMA_VERSION:
        return _schema_error(f"unsupported schema {request['schema']!r}")
    source = request.get("source")
    if not isinstance(source, str):
        return _schema_error("source must be a string")
    try:
        overrides = _wire_overrides(request.get("overrides", {}))
        viewport = _wire_viewport(request["viewport"]) if "viewport" in request else None
    except _SchemaError as exc:
        return _schema_error(str(exc))

    try:
        program = parse_source(source)
    except SourceError as exc:
        diagnostic = {
            "line": exc.line,
            "column": exc.column,
            "message": exc.message,
            "severity": "error",
        }
        return _response(Scene(), (), [diagnostic], viewport)
    evaluation = run(program, overrides)
    diagnostics = [
        {"line": d.line, "column": d.column, "message": d.message, "severity": d.severity}
        for d in evaluation.diagnostics
    ]
    return _response(evaluation.scene, evaluation.free_points, diagnostics, viewport)


def encode_response(response: dict) -> bytes:
    """Canonical wire bytes for a response (sorted keys, one trailing newline)."""
    return (json.dumps(response, sort_keys=True) + "\n").encode("utf-8")


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"

    def do_POST(self) -> None:  # noqa: N802 (http.server API)
        if self.path.rstrip("/") != "/evaluate":
            self._send(404, encode_response(_schema_error(f"no such endpoint: {self.path}")))
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            payload = json.loads(self.rfile.read(length))
        except (ValueError, json.JSONDecodeError):
            self._send(400, encode_response(_schema_error("body is not valid JSON")))
            return
        self._send(200, encode_response(handle_evaluate(payload)))

    def do_OPTIONS(self) -> None:  # noqa: N802
        self.send_response(204)
        self._cors()
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self) -> None:  # noqa: N802
        self._send(404, encode_response(_schema_error("POST /evaluate is the only endpoint")))

    def _send(self, status: int, body: bytes) -> None:
        self.send_response(status)
        self._cors()
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)  # single write per response, safe under threading

    def _cors(self) -> None:
        # the explorer UI runs on another local port during development
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def log_message(self, format: str, *args: object) -> None:
        pass  # keep stdout/stderr quiet; the CLI prints the listen address


def make_server(host: str = DEFAULT_HOST, port: int = DEFAULT_PORT) -> ThreadingHTTPServer:
    return ThreadingHTTPServer((host, port), _Handler)


def serve(host: str = DEFAULT_HOST, port: int = DEFAULT_PORT) -> None:
    with make_server(host, port) as httpd:
        actual_port = httpd.server_address[1]
        print(f"evaluate endpoint on http://{host}:{actual_port}/evaluate", flush=True)
        httpd.serve_forever()
