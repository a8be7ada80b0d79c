"""Stateless request handling shared by the CLI and the local HTTP
service, plus the loopback JSON-over-HTTP server used by the browser
explorer.  Every handler is a pure call into the core modules."""

from __future__ import annotations

import json
import os
from http import HTTPStatus
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .invariants import (
    UnsupportedChiShape,
    associated_polynomial,
    cartan_det,
    chi_formula,
    det_formula,
    frobenius_data_mod_p,
)
from .equivalence import (
    derived_standard_form,
    good_equivalent,
    good_standard_form,
)
from .mutation_analysis import mutation_report
from .quiver import Quiver, QuiverError
from .relations import cartan_matrix
from .typeforms import NotTypeD, analyze_type_a, classify_type_d

SCHEMA_VERSION = 1


class RequestError(Exception):
    def __init__(self, code: str, message: str, status: int = 422):
        super().__init__(message)
        self.code = code
        self.message = message
        self.status = status


def _quiver_from_payload(payload, key: str = "quiver") -> Quiver:
    data = payload.get(key)
    if data is None:
        raise RequestError("missing-quiver", f"request needs a {key!r} field", 400)
    if not isinstance(data, dict):
        raise RequestError("bad-quiver", f"{key!r} must be an object", 400)
    try:
        return Quiver.from_arrows(
            data.get("n", 0), [tuple(a) for a in data.get("arrows", [])]
        )
    except (QuiverError, TypeError) as e:
        raise RequestError("bad-quiver", str(e), 400) from None


def _quiver_json(q: Quiver) -> dict:
    return {"n": q.n, "arrows": [list(a) for a in sorted(q.arrows())]}


def _classify_result(q: Quiver) -> dict:
    try:
        form = classify_type_d(q)
        return {"family": "D", "form": str(form)}
    except NotTypeD:
        shape = analyze_type_a(q)  # raises NotTypeA for anything else
        return {"family": "A", "form": f"A[s={shape.s},t={shape.t}]",
                "s": shape.s, "t": shape.t}


def _invariants_result(q: Quiver, with_chi: bool = False, modp: int | None = None) -> dict:
    C = cartan_matrix(q)
    poly = associated_polynomial(C)
    out = {
        "cartan": [list(row) for row in C],
        "det": cartan_det(C),
        "associated": {"coeffs": list(poly.coeffs), "pretty": str(poly)},
    }
    if with_chi:
        try:
            form = classify_type_d(q)
        except NotTypeD:
            form = analyze_type_a(q)
        try:
            chi = chi_formula(form)
            out["chi"] = {"coeffs": list(chi.coeffs), "pretty": str(chi)}
            out["det_formula"] = det_formula(form)
        except UnsupportedChiShape as e:
            out["chi"] = None
            out["chi_note"] = str(e)
    if modp is not None:
        if modp < 2:
            raise RequestError("bad-prime", "modulus must be a prime >= 2", 400)
        try:
            factors = frobenius_data_mod_p(C, modp)
        except ValueError as e:
            raise RequestError("bad-prime", str(e)) from None
        out["frobenius_mod_p"] = {"p": modp, "invariant_factors": [list(f) for f in factors]}
    return out


def _mutation_report_result(q: Quiver) -> dict:
    rows = []
    for rep in mutation_report(q):
        rows.append(
            {
                "k": rep.k,
                "before": {"neg": rep.before.neg, "pos": rep.before.pos},
                "after": {"neg": rep.after.neg, "pos": rep.after.pos},
                "verdict": rep.verdict,
            }
        )
    return {"vertices": rows}


def _std_form_result(q: Quiver, relation: str) -> dict:
    form = classify_type_d(q)
    if relation == "good":
        return {"relation": "good", "form": str(good_standard_form(form))}
    if relation == "derived":
        return {"relation": "derived", "form": str(derived_standard_form(form))}
    raise RequestError("bad-relation", "relation must be 'good' or 'derived'", 400)


def handle_request(op: str, payload: dict) -> dict:
    """Dispatch one request; returns the result object or raises
    RequestError (400-class for malformed payloads, 422 for domain errors)."""
    if not isinstance(payload, dict):
        raise RequestError("bad-payload", "payload must be a JSON object", 400)
    try:
        if op == "mutate":
            q = _quiver_from_payload(payload)
            k = payload.get("k")
            if not isinstance(k, int) or not (0 <= k < q.n):
                raise RequestError("bad-vertex", f"vertex k={k!r} out of range", 422)
            return {"quiver": _quiver_json(q.mutate(k))}
        if op == "classify":
            return _classify_result(_quiver_from_payload(payload))
        if op == "invariants":
            q = _quiver_from_payload(payload)
            return _invariants_result(
                q, bool(payload.get("chi")), payload.get("modp")
            )
        if op == "mutation_report":
            return _mutation_report_result(_quiver_from_payload(payload))
        if op == "std_form":
            q = _quiver_from_payload(payload)
            return _std_form_result(q, payload.get("relation", "derived"))
        if op == "good_equiv":
            q1 = _quiver_from_payload(payload, "quiver1")
            q2 = _quiver_from_payload(payload, "quiver2")
            f1, f2 = classify_type_d(q1), classify_type_d(q2)
            eq = good_equivalent(f1, f2)
            witness = (
                "same good-mutation class"
                if eq
                else "distinct good-mutation parameters"
            )
            return {"equivalent": eq, "forms": [str(f1), str(f2)], "witness": witness}
    except RequestError:
        raise
    except QuiverError as e:
        raise RequestError("domain-error", str(e), 422) from None
    raise RequestError("unknown-op", f"unknown operation {op!r}", 400)


# -- HTTP server ---------------------------------------------------------

DEFAULT_PORT = 7474


def _make_handler(static_dir: str | None):
    class Handler(BaseHTTPRequestHandler):
        def log_message(self, *args):  # quiet by default
            pass

        def _send_json(self, status: int, obj: dict):
            body = json.dumps(obj).encode()
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(body)

        def do_POST(self):
            if not self.path.startswith("/api/"):
                self._send_json(
                    HTTPStatus.NOT_FOUND,
                    {"v": SCHEMA_VERSION, "ok": False,
                     "error": {"code": "not-found", "message": self.path}},
                )
                return
            op = self.path[len("/api/"):]
            try:
                length = int(self.headers.get("Content-Length", "0"))
                payload = json.loads(self.rfile.read(length) or b"{}")
            except (ValueError, json.JSONDecodeError):
                self._send_json(
                    HTTPStatus.BAD_REQUEST,
                    {"v": SCHEMA_VERSION, "ok": False,
                     "error": {"code": "bad-json", "message": "malformed JSON body"}},
                )
                return
            try:
                result = handle_request(op, payload)
            except RequestError as e:
                self._send_json(
                    e.status,
                    {"v": SCHEMA_VERSION, "ok": False,
                     "error": {"code": e.code, "message": e.message}},
                )
                return
            self._send_json(
                HTTPStatus.OK, {"v": SCHEMA_VERSION, "ok": True, "result": result}
            )

        def do_GET(self):
            path = self.path.split("?", 1)[0]
            if static_dir is None:
                self._send_json(
                    HTTPStatus.NOT_FOUND,
                    {"v": SCHEMA_VERSION, "ok": False,
                     "error": {"code": "no-static", "message": "no UI bundle configured"}},
                )
                return
            rel = path.lstrip("/") or "index.html"
            full = os.path.normpath(os.path.join(static_dir, rel))
            if not full.startswith(os.path.abspath(static_dir)) or not os.path.isfile(full):
                self.send_response(HTTPStatus.NOT_FOUND)
                self.end_headers()
                return
            ctype = {
                ".html": "text/html",
                ".js": "text/javascript",
                ".css": "text/css",
                ".json": "application/json",
            }.get(os.path.splitext(full)[1], "application/octet-stream")
            with open(full, "rb") as fh:
                body = fh.read()
            self.send_response(HTTPStatus.OK)
            self.send_header("Content-Type", ctype)
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

    return Handler


def make_server(
    port: int = DEFAULT_PORT,
    host: str = "127.0.0.1",
    static_dir: str | None = None,
) -> ThreadingHTTPServer:
    handler = _make_handler(
        os.path.abspath(static_dir) if static_dir else _default_static_dir()
    )
    return ThreadingHTTPServer((host, port), handler)


def _default_static_dir() -> str | None:
    here = os.path.dirname(os.path.abspath(__file__))
    for cand in (
        os.path.join(here, "..", "..", "frontend", "dist"),
        os.path.join(here, "static"),
    ):
        cand = os.path.abspath(cand)
        if os.path.isdir(cand):
            return cand
    return None


def serve(port: int = DEFAULT_PORT, host: str = "127.0.0.1",
          static_dir: str | None = None) -> None:
    server = make_server(port, host, static_dir)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
