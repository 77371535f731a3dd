from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, HTTPServer
from pathlib import Path

import pytest

DATA_DIR = Path(__file__).resolve().parents[1] / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def fixture_kbs():
    from katecheo.kb import KnowledgeBase, parse_kb

    kbs = []
    for topic, name in (("Medical Sciences", "medical_sciences"),
                        ("Christianity", "christianity")):
        articles = parse_kb((DATA_DIR / "kbs" / f"{name}.json").read_bytes())
        kbs.append(KnowledgeBase(topic, tuple(articles)))
    return kbs


class _Handler(BaseHTTPRequestHandler):
    """Scriptable handler: the server's `routes` maps path -> responder."""

    def do_GET(self):
        self._dispatch()

    def do_POST(self):
        self._dispatch()

    def _dispatch(self):
        responder = self.server.routes.get(self.path)
        if responder is None:
            self.send_error(404)
            return
        length = int(self.headers.get("Content-Length") or 0)
        body = self.rfile.read(length) if length else b""
        status, payload, headers = responder(body)
        self.send_response(status)
        for key, value in headers.items():
            self.send_header(key, value)
        self.send_header("Content-Length", str(len(payload)))
        self.end_headers()
        self.wfile.write(payload)

    def log_message(self, *args):
        pass


class LocalHttpServer:
    def __init__(self):
        self._server = HTTPServer(("127.0.0.1", 0), _Handler)
        self._server.routes = {}
        self._thread = threading.Thread(target=self._server.serve_forever, daemon=True)
        self._thread.start()
        self.base_url = f"http://127.0.0.1:{self._server.server_address[1]}"

    def route(self, path, responder):
        """responder(request_body) -> (status, payload_bytes, headers)."""
        self._server.routes[path] = responder

    def route_json(self, path, obj, status=200):
        payload = json.dumps(obj).encode("utf-8")
        self.route(path, lambda _body: (status, payload, {"Content-Type": "application/json"}))

    def stop(self):
        self._server.shutdown()
        self._server.server_close()


@pytest.fixture
def http_server():
    server = LocalHttpServer()
    yield server
    server.stop()
