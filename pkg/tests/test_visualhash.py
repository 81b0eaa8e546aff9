"""Scene derivation and SVG rendering: determinism and injectivity."""

import json
import random

import pytest

from onionrecog.errors import ContractViolation
from onionrecog.visualhash import GRID, MAX_BITS, PALETTE, Scene, scene_of, svg_of


def test_zero_fingerprint_gives_all_first_attribute_scene():
    s = scene_of(0, 21)
    assert all(t == (0, 0, 0) for t in s.tiles)


def test_scene_is_deterministic():
    assert scene_of(0x155555, 21) == scene_of(0x155555, 21)


def test_scene_rejects_wide_inputs():
    with pytest.raises(ContractViolation):
        scene_of(0, MAX_BITS + 1)
    with pytest.raises(ContractViolation):
        scene_of(1 << 21, 21)


def test_scene_bit_layout():
    # tile i's palette index is fingerprint bits [3i, 3i+3); unused tiles stay 0
    y = 0b101_011_110
    s = scene_of(y, 9)
    assert [t[1] for t in s.tiles] == [0b110, 0b011, 0b101, 0, 0, 0, 0, 0, 0]
    # shape and orientation are views of the same bits
    for shape, palette, orientation in s.tiles:
        assert shape == palette & 0b11
        assert orientation == (palette >> 1) & 0b11


def test_fingerprint_recoverable_from_tiles():
    rng = random.Random(8)
    for _ in range(500):
        y = rng.getrandbits(21)
        s = scene_of(y, 21)
        recovered = sum(t[1] << (3 * i) for i, t in enumerate(s.tiles))
        assert recovered == y


def test_scene_json_is_canonical():
    text = scene_of(5, 21).to_json()
    assert " " not in text
    obj = json.loads(text)
    assert list(obj) == sorted(obj)
    assert obj["fingerprint"] == 5 and obj["m"] == 21


def test_svg_is_byte_deterministic():
    s = scene_of(0x12345, 21)
    assert svg_of(s) == svg_of(s)


def test_svg_shape():
    doc = svg_of(scene_of(0x1FFFFF, 21))
    assert doc.startswith("<svg")
    assert doc.count("<g id=\"tile") == GRID * GRID
    assert doc.endswith("</svg>")
    assert all(ord(c) < 128 for c in doc)


def test_distinct_fingerprints_give_distinct_svg():
    rng = random.Random(99)
    for _ in range(10_000):
        a, b = rng.getrandbits(21), rng.getrandbits(21)
        if a == b:
            continue
        assert svg_of(scene_of(a, 21)) != svg_of(scene_of(b, 21))


def test_palette_has_eight_colors():
    assert len(PALETTE) == len(set(PALETTE)) == 8


def test_injectivity_sampled():
    rng = random.Random(3)
    seen = {}
    for _ in range(50_000):
        y = rng.getrandbits(21)
        key = scene_of(y, 21).tiles
        assert seen.setdefault(key, y) == y
