"""Bit-exact persistence of the public coefficient vector.

File layout (all integers big-endian):

    offset  size  field
    0       4     magic "RCGZ"
    4       1     format version (1)
    5       2     n (item bit-length)
    7       1     m (fingerprint bit-length)
    8       1     N (stored-item count)
    9       2     q (phishing-attempt budget)
    11      ...   q+N coefficients, each ceil(n/8) bytes
    end     4     CRC-32 of all prior bytes

Only the public vector and parameters are written; the key, fingerprint,
passphrase, and stored items never touch disk.  The CRC detects
accidental corruption only; the vector is public, so tampering is the
collision game's problem, not the file format's.
"""

from __future__ import annotations

import os
import struct
import tempfile
import zlib
from pathlib import Path

from .core import RecognizerInstance, RecognizerParams
from .errors import ContractViolation, CorruptDb, InvalidDbParams, NotARecognizerDb
from .uhash import CoeffVector

MAGIC = b"RCGZ"
FORMAT_VERSION = 1
HEADER = struct.Struct(">4sBHBBH")


def db_file_size(params: RecognizerParams) -> int:
    """Exact on-disk size for the given parameters."""
    return HEADER.size + params.k * ((params.n + 7) // 8) + 4


def encode_db(params: RecognizerParams, db: CoeffVector) -> bytes:
    if db.n != params.n or db.k != params.k:
        raise ContractViolation("coefficient vector does not match parameters")
    out = bytearray(
        HEADER.pack(MAGIC, FORMAT_VERSION, params.n, params.m, params.N, params.q)
    )
    width = (params.n + 7) // 8
    for c in db.coeffs:
        out += c.to_bytes(width, "big")
    out += struct.pack(">I", zlib.crc32(bytes(out)))
    return bytes(out)


def decode_db(blob: bytes) -> tuple[RecognizerParams, CoeffVector]:
    if blob[:4] != MAGIC:
        raise NotARecognizerDb("not a recognizer database")
    if len(blob) < HEADER.size + 4:
        raise CorruptDb("file truncated")
    crc = struct.unpack(">I", blob[-4:])[0]
    if crc != zlib.crc32(blob[:-4]):
        raise CorruptDb("checksum mismatch; file corrupted")
    _, version, n, m, N, q = HEADER.unpack(blob[: HEADER.size])
    if version != FORMAT_VERSION:
        raise CorruptDb(f"unsupported format version {version}")
    try:
        params = RecognizerParams(n=n, N=N, q=q, m=m)
    except ContractViolation as e:
        raise InvalidDbParams(str(e)) from None
    width = (n + 7) // 8
    body = blob[HEADER.size : -4]
    if len(body) != params.k * width:
        raise CorruptDb(
            f"expected {params.k} coefficients of {width} bytes, got {len(body)} bytes"
        )
    coeffs = tuple(
        int.from_bytes(body[i * width : (i + 1) * width], "big")
        for i in range(params.k)
    )
    try:
        vec = CoeffVector(n, coeffs)
    except ContractViolation as e:
        raise CorruptDb(str(e)) from None
    return params, vec


def save_db(inst: RecognizerInstance, path: str | os.PathLike) -> None:
    """Write the public database atomically (temp file + rename)."""
    path = Path(path)
    blob = encode_db(inst.params, inst.db)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), prefix=path.name)
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(blob)
        os.replace(tmp, path)
    except OSError as e:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise OSError(f"failed to write database to {path}: {e}") from e


def load_db(path: str | os.PathLike) -> tuple[RecognizerParams, CoeffVector]:
    path = Path(path)
    try:
        blob = path.read_bytes()
    except OSError as e:
        raise OSError(f"failed to read database from {path}: {e}") from e
    return decode_db(blob)
