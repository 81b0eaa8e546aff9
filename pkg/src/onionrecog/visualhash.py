"""Deterministic visual rendering of fingerprints.

A fingerprint is sliced into a 3x3 grid of tiles.  Each tile consumes up
to three fingerprint bits as its palette index; its shape and orientation
are derived from the same bits so tiles vary visually without extra
entropy.  The slicing is injective for m <= 27 (nine tiles of three
bits), and the SVG serialization is byte-deterministic, so equal
fingerprints give byte-equal images and distinct fingerprints give
distinct ones.

Bit layout (frozen): tile i of the grid, row-major, takes fingerprint
bits [3*i, 3*i + 3) as its palette index, least significant bit first.
Tiles beyond the available bits keep palette 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ContractViolation

GRID = 3
MAX_BITS = GRID * GRID * 3
CANVAS = 256

# Eight high-contrast colors chosen to stay distinguishable under the
# common color-vision deficiencies (dark/light and hue both vary).
PALETTE = (
    "#1a1a1a",  # near-black
    "#e69f00",  # orange
    "#56b4e9",  # sky blue
    "#009e73",  # bluish green
    "#f0e442",  # yellow
    "#0072b2",  # blue
    "#d55e00",  # vermillion
    "#cc79a7",  # reddish purple
)


@dataclass(frozen=True)
class Scene:
    """Tile attributes for one fingerprint: (shape, palette, orientation) per cell."""

    m: int
    fingerprint: int
    tiles: tuple[tuple[int, int, int], ...]

    def to_json(self) -> str:
        """Canonical JSON: sorted keys, no insignificant whitespace."""
        return json.dumps(
            {"fingerprint": self.fingerprint, "m": self.m, "tiles": self.tiles},
            sort_keys=True,
            separators=(",", ":"),
        )


def scene_of(y: int, m: int) -> Scene:
    """Slice an m-bit fingerprint into the 3x3 tile grid."""
    if m > MAX_BITS:
        raise ContractViolation(f"fingerprints longer than {MAX_BITS} bits unsupported")
    if y < 0 or y >> m:
        raise ContractViolation(f"fingerprint does not fit in {m} bits")
    tiles = []
    for i in range(GRID * GRID):
        bits = (y >> (3 * i)) & 0x7 if 3 * i < m else 0
        # shape and orientation are redundant views of the same bits;
        # injectivity rests on the palette channel alone
        tiles.append((bits & 0x3, bits, (bits >> 1) & 0x3))
    return Scene(m, y, tuple(tiles))


def _tile_svg(col: int, row: int, shape: int, palette: int, orientation: int) -> str:
    size = CANVAS // GRID
    x0, y0 = col * size, row * size
    cx, cy = x0 + size // 2, y0 + size // 2
    color = PALETTE[palette]
    rot = f' transform="rotate({orientation * 90} {cx} {cy})"' if orientation else ""
    pad = size // 8
    if shape == 0:  # square
        body = (
            f'<rect x="{x0 + pad}" y="{y0 + pad}" width="{size - 2 * pad}"'
            f' height="{size - 2 * pad}" fill="{color}"{rot}/>'
        )
    elif shape == 1:  # circle
        body = f'<circle cx="{cx}" cy="{cy}" r="{size // 2 - pad}" fill="{color}"/>'
    elif shape == 2:  # triangle
        pts = (
            f"{cx},{y0 + pad} {x0 + size - pad},{y0 + size - pad} "
            f"{x0 + pad},{y0 + size - pad}"
        )
        body = f'<polygon points="{pts}" fill="{color}"{rot}/>'
    else:  # diamond
        pts = (
            f"{cx},{y0 + pad} {x0 + size - pad},{cy} "
            f"{cx},{y0 + size - pad} {x0 + pad},{cy}"
        )
        body = f'<polygon points="{pts}" fill="{color}"{rot}/>'
    return f'<g id="tile{row * GRID + col}">{body}</g>'


def svg_of(scene: Scene) -> str:
    """Byte-deterministic SVG document for a scene."""
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}"'
        f' viewBox="0 0 {CANVAS} {CANVAS}">',
        f'<rect width="{CANVAS}" height="{CANVAS}" fill="#ffffff"/>',
    ]
    for i, (shape, palette, orientation) in enumerate(scene.tiles):
        parts.append(_tile_svg(i % GRID, i // GRID, shape, palette, orientation))
    parts.append("</svg>")
    return "".join(parts)
