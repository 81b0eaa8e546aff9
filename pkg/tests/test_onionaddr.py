"""Onion v3 address parsing against an independent base32 + SHA3 oracle."""

import hashlib
import random

import pytest

from onionrecog.errors import (
    ContractViolation,
    OnionChecksumError,
    OnionFormatError,
    OnionVersionError,
)
from onionrecog.onionaddr import encode_onion, item_to_pubkey, parse_onion

ZERO_KEY_DOMAIN = "aaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaam2dqd.onion"


def oracle_encode(pubkey: bytes) -> str:
    """Independent construction: manual 5-bit base32 over the 35-byte blob."""
    version = b"\x03"
    check = hashlib.sha3_256(b".onion checksum" + pubkey + version).digest()[:2]
    blob = pubkey + check + version
    acc = int.from_bytes(blob, "big")
    chars = []
    for i in range(56):
        chars.append("abcdefghijklmnopqrstuvwxyz234567"[(acc >> (275 - 5 * i)) & 31])
    return "".join(chars) + ".onion"


def crafted_label(pubkey: bytes, check: bytes, version: bytes) -> str:
    import base64

    return base64.b32encode(pubkey + check + version).decode().lower() + ".onion"


def test_round_trip_random_keys():
    rng = random.Random(31337)
    for _ in range(300):
        k = rng.getrandbits(256).to_bytes(32, "big")
        assert parse_onion(encode_onion(k)) == int.from_bytes(k, "big")


def test_encode_matches_independent_oracle():
    rng = random.Random(7)
    for _ in range(50):
        k = rng.getrandbits(256).to_bytes(32, "big")
        assert encode_onion(k) == oracle_encode(k)


def test_zero_key_golden_vector():
    assert encode_onion(bytes(32)) == ZERO_KEY_DOMAIN == oracle_encode(bytes(32))
    assert parse_onion(ZERO_KEY_DOMAIN) == 0


def test_domain_shape():
    d = encode_onion(bytes(32))
    assert len(d) == 62 and d.endswith(".onion")


def test_length_error():
    with pytest.raises(OnionFormatError):
        parse_onion("short.onion")


def test_alphabet_error():
    label = "a" * 55 + "1"  # '1' is outside the base32 alphabet
    with pytest.raises(OnionFormatError):
        parse_onion(label + ".onion")


def test_version_error():
    pubkey = bytes(32)
    version = b"\x05"
    check = hashlib.sha3_256(b".onion checksum" + pubkey + version).digest()[:2]
    with pytest.raises(OnionVersionError):
        parse_onion(crafted_label(pubkey, check, version))


def test_checksum_error():
    pubkey = bytes(32)
    with pytest.raises(OnionChecksumError):
        parse_onion(crafted_label(pubkey, b"\xde\xad", b"\x03"))


def test_flipped_character_detected():
    d = encode_onion(bytes(range(32)))
    flipped = ("b" if d[0] == "a" else "a") + d[1:]
    with pytest.raises((OnionChecksumError, OnionVersionError)):
        parse_onion(flipped)


def test_case_scheme_and_subdomain_tolerance():
    k = bytes(range(32))
    d = encode_onion(k)
    item = int.from_bytes(k, "big")
    assert parse_onion(d.upper()) == item
    assert parse_onion(f"http://{d}/path?x=1") == item
    assert parse_onion(f"www.sub.{d}") == item
    assert parse_onion(f"  {d}.  ") == item


def test_encode_rejects_wrong_length():
    with pytest.raises(ContractViolation):
        encode_onion(bytes(31))


def test_item_to_pubkey_inverts():
    k = bytes(range(32))
    assert item_to_pubkey(parse_onion(encode_onion(k))) == k
