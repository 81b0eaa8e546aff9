"""Loopback HTTP bridge for the web verifier.

Speaks a small JSON protocol over POST /: requests carry an id and a kind
(init or check), responses echo the id with kind initResult, checkResult,
or error. The database travels as base64 of the exact file bytes, so the
web client can hold on to the blob without understanding its layout.

The passphrase appears only in check requests and is never echoed back.
No match verdict is computed anywhere: a yes/no answer would let an
attacker test passphrase guesses mechanically.
"""

from __future__ import annotations

import base64
import binascii
import json
import random
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .core import RecognizerParams, rec_init, rec_test, select_m
from .errors import (
    OnionFormatError,
    OutOfRangeError,
    StoreError,
    UnknownWordError,
)
from .onionaddr import parse_onion
from .passcode import decode_key, encode_key, load_wordlist, validate_entry
from .store import decode_db, encode_db
from .visualhash import scene_of, svg_of

ITEM_BITS = 256


class BridgeError(Exception):
    def __init__(self, code: str, message: str, position: int | None = None):
        super().__init__(message)
        self.code = code
        self.position = position


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _fingerprint_fields(y: int, m: int) -> dict:
    scene = scene_of(y, m)
    return {
        "fingerprintHex": f"{y:0{(m + 3) // 4}x}",
        "sceneJson": scene.to_json(),
        "svg": svg_of(scene),
    }


def _handle_init(req: dict) -> dict:
    domains = req.get("domains")
    if not isinstance(domains, list) or not 2 <= len(domains) <= 5:
        raise BridgeError("bad-request", "need 2 to 5 domains")
    if len(set(d.strip().lower() for d in domains)) != len(domains):
        raise BridgeError("duplicate-domain", "duplicate domains")
    items = []
    for i, d in enumerate(domains):
        try:
            items.append(parse_onion(d))
        except OnionFormatError as e:
            raise BridgeError("invalid-domain", str(e), position=i)
    if len(set(items)) != len(items):
        raise BridgeError("duplicate-domain", "domains resolve to the same service key")

    q = int(req.get("q", 100))
    eps = float(req.get("eps", 3e-4))
    N = len(items)
    params = RecognizerParams(n=ITEM_BITS, N=N, q=q, m=select_m(N, q, eps))
    seed = req.get("seed")
    rng = random.Random(int(seed, 16)) if seed is not None else random.SystemRandom()
    inst = rec_init(items, params, rng)
    return {
        "kind": "initResult",
        "dbBase64": base64.b64encode(encode_db(inst.params, inst.db)).decode("ascii"),
        "passphraseWords": encode_key(inst.key).split("-"),
        **_fingerprint_fields(inst.fingerprint, params.m),
    }


def _handle_check(req: dict) -> dict:
    try:
        raw = base64.b64decode(req["dbBase64"], validate=True)
    except (KeyError, binascii.Error, ValueError):
        raise BridgeError("bad-request", "missing or undecodable dbBase64")
    try:
        params, db = decode_db(raw)
    except StoreError as e:
        raise BridgeError("corrupt-db", str(e))
    try:
        item = parse_onion(req.get("domain", ""))
    except OnionFormatError as e:
        raise BridgeError("invalid-domain", str(e))

    wl = load_wordlist()
    entry = req.get("passphrase", "")
    status = validate_entry(entry, wl)
    word_status = [
        {"word": s.word, "accepted": s.accepted, "suggestion": s.suggestion}
        for s in status.words
    ]
    for i, s in enumerate(status.words, 1):  # 1-based, matching decode errors
        if not s.accepted:
            raise BridgeError("unknown-word", f"unknown word {s.word!r}", position=i)
    try:
        key = decode_key(entry, params.N, params.m, wl)
    except UnknownWordError as e:
        raise BridgeError("unknown-word", str(e), position=e.position)
    except OutOfRangeError as e:
        raise BridgeError("out-of-range", str(e))
    except ValueError as e:
        raise BridgeError("bad-passphrase", str(e))
    y = rec_test(db, key, item, params)
    return {
        "kind": "checkResult",
        "wordStatus": word_status,
        **_fingerprint_fields(y, params.m),
    }


def handle_message(msg: dict) -> dict:
    """Pure request-to-response mapping, shared by the HTTP server and tests."""
    rid = msg.get("id")
    try:
        kind = msg.get("kind")
        if kind == "init":
            resp = _handle_init(msg)
        elif kind == "check":
            resp = _handle_check(msg)
        else:
            raise BridgeError("bad-request", f"unknown kind {kind!r}")
    except BridgeError as e:
        resp = {"kind": "error", "code": e.code, "message": str(e)}
        if e.position is not None:
            resp["position"] = e.position
    resp["id"] = rid
    return resp


class _Handler(BaseHTTPRequestHandler):
    def _send(self, status: int, body: bytes) -> None:
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Access-Control-Allow-Methods", "POST, OPTIONS")
        self.end_headers()
        self.wfile.write(body)

    def do_OPTIONS(self):  # CORS preflight from the browser client
        self._send(204, b"")

    def do_POST(self):
        length = int(self.headers.get("Content-Length", 0))
        try:
            msg = json.loads(self.rfile.read(length))
            if not isinstance(msg, dict):
                raise ValueError("request body must be a JSON object")
        except ValueError as e:
            self._send(
                400,
                _canonical({"kind": "error", "code": "bad-json", "message": str(e), "id": None}).encode(),
            )
            return
        self._send(200, _canonical(handle_message(msg)).encode())

    def log_message(self, fmt, *args):
        pass


def serve(port: int = 8741) -> None:
    server = ThreadingHTTPServer(("127.0.0.1", port), _Handler)
    print(f"bridge listening on http://127.0.0.1:{port}/ (Ctrl-C to stop)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
