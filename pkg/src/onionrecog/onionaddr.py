"""Onion v3 address parsing: domain text <-> 256-bit recognizer item.

A v3 address is base32(pubkey || checksum || version) + ".onion" where
pubkey is the 32-byte service identity key, the checksum is the first two
bytes of SHA3-256(".onion checksum" || pubkey || version) and the version
byte is 3.  The recognizer item is the raw public key, so any spelling of
one address (case, scheme, subdomains) maps to one item.
"""

from __future__ import annotations

import base64
import hashlib

from .errors import (
    ContractViolation,
    OnionChecksumError,
    OnionFormatError,
    OnionVersionError,
)

LABEL_LEN = 56
_B32_ALPHABET = set("abcdefghijklmnopqrstuvwxyz234567")


def _checksum(pubkey: bytes, version: bytes) -> bytes:
    return hashlib.sha3_256(b".onion checksum" + pubkey + version).digest()[:2]


def parse_onion(text: str) -> int:
    """Parse a domain string (bare label, domain, or URL) to the 256-bit item.

    Raises a distinct error for each failure mode: label length, alphabet,
    version byte, checksum.
    """
    s = text.strip().lower()
    if "://" in s:
        s = s.split("://", 1)[1]
    s = s.split("/", 1)[0]
    if s.endswith("."):
        s = s[:-1]
    if s.endswith(".onion"):
        s = s[: -len(".onion")]
    label = s.rsplit(".", 1)[-1]  # subdomain labels resolve to the same key
    if len(label) != LABEL_LEN:
        raise OnionFormatError(
            f"onion label must be {LABEL_LEN} characters, got {len(label)}"
        )
    bad = set(label) - _B32_ALPHABET
    if bad:
        raise OnionFormatError(f"invalid base32 characters: {sorted(bad)}")
    raw = base64.b32decode(label.upper())
    pubkey, check, version = raw[:32], raw[32:34], raw[34:]
    if version != b"\x03":
        raise OnionVersionError(f"unsupported onion address version {version[0]}")
    if check != _checksum(pubkey, version):
        raise OnionChecksumError("onion address checksum mismatch")
    return int.from_bytes(pubkey, "big")


def encode_onion(pubkey: bytes) -> str:
    """Canonical lowercase v3 domain for a 32-byte public key."""
    if len(pubkey) != 32:
        raise ContractViolation(f"public key must be 32 bytes, got {len(pubkey)}")
    version = b"\x03"
    raw = pubkey + _checksum(pubkey, version) + version
    return base64.b32encode(raw).decode("ascii").lower() + ".onion"


def item_to_pubkey(item: int) -> bytes:
    """The 32-byte key behind a 256-bit item (inverse of parse_onion)."""
    return item.to_bytes(32, "big")
