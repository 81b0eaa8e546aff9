"""Database file format: layout, round-trips, corruption detection."""

import random
import struct
import zlib

import pytest

from onionrecog.core import RecognizerParams, rec_init
from onionrecog.errors import CorruptDb, InvalidDbParams, NotARecognizerDb
from onionrecog.store import (
    HEADER,
    MAGIC,
    db_file_size,
    decode_db,
    encode_db,
    load_db,
    save_db,
)


def make_instance(rng: random.Random, N: int = 2, n: int = 256, q: int = 100, m: int = 21):
    params = RecognizerParams(n=n, N=N, q=q, m=m)
    items = set()
    while len(items) < N:
        items.add(rng.getrandbits(n))
    return rec_init(sorted(items), params, rng)


def test_round_trip_in_memory():
    rng = random.Random(1)
    for N in (2, 3, 4, 5):
        inst = make_instance(rng, N)
        params, db = decode_db(encode_db(inst.params, inst.db))
        assert params == inst.params and db == inst.db


def test_round_trip_on_disk(tmp_path):
    rng = random.Random(2)
    inst = make_instance(rng, 3)
    path = tmp_path / "r.db"
    save_db(inst, path)
    assert load_db(path) == (inst.params, inst.db)
    blob = path.read_bytes()
    save_db(inst, path)  # overwrite is atomic and byte-identical
    assert path.read_bytes() == blob


def test_file_size_formula():
    params = RecognizerParams(n=256, N=4, q=100, m=21)
    assert db_file_size(params) == 11 + 104 * 32 + 4 == 3343
    inst = make_instance(random.Random(3), 4)
    assert len(encode_db(inst.params, inst.db)) == 3343


def test_all_table_rows_fit_the_storage_budget():
    for N in (2, 3, 4, 5):
        assert db_file_size(RecognizerParams(n=256, N=N, q=100, m=21)) < 5120


def test_bad_magic():
    with pytest.raises(NotARecognizerDb):
        decode_db(b"NOPE" + bytes(32))


def test_flipped_payload_bit():
    inst = make_instance(random.Random(4))
    blob = bytearray(encode_db(inst.params, inst.db))
    blob[20] ^= 0x10
    with pytest.raises(CorruptDb):
        decode_db(bytes(blob))


def test_truncated_file():
    inst = make_instance(random.Random(5))
    blob = encode_db(inst.params, inst.db)
    with pytest.raises(CorruptDb):
        decode_db(blob[:50])
    with pytest.raises(CorruptDb):
        decode_db(blob[:8])


def test_unsupported_version():
    inst = make_instance(random.Random(6))
    blob = bytearray(encode_db(inst.params, inst.db))
    blob[4] = 9
    blob[-4:] = struct.pack(">I", zlib.crc32(bytes(blob[:-4])))
    with pytest.raises(CorruptDb):
        decode_db(bytes(blob))


def test_invalid_parameters_rejected():
    # craft a structurally valid file claiming N=1
    body = bytes(3 * 32)
    head = HEADER.pack(MAGIC, 1, 256, 21, 1, 2)
    blob = head + body
    blob += struct.pack(">I", zlib.crc32(blob))
    with pytest.raises(InvalidDbParams):
        decode_db(blob)


def test_file_never_contains_item_bytes():
    rng = random.Random(7)
    for _ in range(100):
        params = RecognizerParams(n=256, N=2, q=10, m=21)
        items = [rng.getrandbits(256) for _ in range(2)]
        inst = rec_init(items, params, rng)
        blob = encode_db(inst.params, inst.db)
        for x in items:
            assert x.to_bytes(32, "big") not in blob


def test_load_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_db(tmp_path / "absent.db")
