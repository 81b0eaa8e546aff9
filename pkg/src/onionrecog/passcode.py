"""Passphrase encoding of recognizer keys.

Keys are written as hyphen-separated words from a fixed 1449-word list
(mixed-radix base 1449, first word = least significant digit).  Every two
list words are at Levenshtein distance >= 3, so up to two typing errors
per word are always detectable, and a single error has a unique repair.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Sequence

from .core import Key
from .errors import (
    ContractViolation,
    InsufficientPoolError,
    OutOfRangeError,
    UnknownWordError,
)

RADIX = 1449
MAX_KEY_BITS = 84  # N = 5 at m = 21; beyond this a recognizer stops making sense


def levenshtein(a: str, b: str, bound: int | None = None) -> int:
    """Edit distance; with a bound, any value >= bound is reported as bound."""
    if a == b:
        return 0
    if bound is not None and abs(len(a) - len(b)) >= bound:
        return bound
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[-1] + 1, prev[j - 1] + (ca != cb)))
        if bound is not None and min(cur) >= bound:
            return bound
        prev = cur
    d = prev[-1]
    return min(d, bound) if bound is not None else d


@dataclass(frozen=True)
class Wordlist:
    words: tuple[str, ...]
    provenance: str = ""

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {w: i for i, w in enumerate(self.words)}
        )

    def index_of(self, word: str) -> int | None:
        return self._index.get(word)

    def __len__(self) -> int:
        return len(self.words)


_SHIPPED: Wordlist | None = None


def load_wordlist() -> Wordlist:
    """The shipped 1449-word list (cached)."""
    global _SHIPPED
    if _SHIPPED is None:
        text = resources.files("onionrecog.data").joinpath("wordlist.txt").read_text()
        words = tuple(w for w in text.split("\n") if w)
        _SHIPPED = Wordlist(
            words,
            provenance=(
                "seeded random sample of the purely alphabetic EFF large "
                "wordlist entries that survive the pairwise Levenshtein "
                "distance >= 3 filter; regenerate with "
                "tools/build_shipped_wordlist.py"
            ),
        )
    return _SHIPPED


def words_needed(key_bits: int) -> int:
    """Smallest word count w with RADIX^w >= 2^key_bits."""
    w = 0
    space = 1
    while space < (1 << key_bits):
        space *= RADIX
        w += 1
    return w


def encode_bits(value: int, key_bits: int, wordlist: Wordlist | None = None) -> str:
    """Write a key_bits-bit integer as a hyphen-joined passphrase."""
    if key_bits > MAX_KEY_BITS:
        raise ContractViolation(f"key length {key_bits} exceeds {MAX_KEY_BITS} bits")
    if value < 0 or value >> key_bits:
        raise ContractViolation(f"value does not fit in {key_bits} bits")
    wl = wordlist or load_wordlist()
    words = []
    for _ in range(words_needed(key_bits)):
        value, d = divmod(value, RADIX)
        words.append(wl.words[d])
    return "-".join(words)


def encode_key(key: Key, wordlist: Wordlist | None = None) -> str:
    """Passphrase for a Key: its coefficients packed big-endian, a_1 first."""
    return encode_bits(key_to_int(key), key.bits, wordlist)


def key_to_int(key: Key) -> int:
    value = 0
    for c in key.coeffs:
        value = (value << key.m) | c
    return value


def key_from_int(value: int, N: int, m: int) -> Key:
    mask = (1 << m) - 1
    coeffs = tuple((value >> (m * i)) & mask for i in reversed(range(N - 1)))
    return Key(m, coeffs)


def decode_bits(passphrase: str, key_bits: int, wordlist: Wordlist | None = None) -> int:
    """Inverse of encode_bits; rejects unknown words and out-of-range codes."""
    wl = wordlist or load_wordlist()
    parts = passphrase.strip().split("-")
    expected = words_needed(key_bits)
    if len(parts) != expected:
        raise ContractViolation(
            f"expected {expected} words for a {key_bits}-bit key, got {len(parts)}"
        )
    digits = []
    for pos, word in enumerate(parts, 1):  # positions are 1-based in errors
        idx = wl.index_of(word)
        if idx is None:
            raise UnknownWordError(word, pos)
        digits.append(idx)
    value = 0
    for d in reversed(digits):
        value = value * RADIX + d
    if value >> key_bits:
        raise OutOfRangeError(
            f"passphrase decodes above the {key_bits}-bit key space"
        )
    return value


def decode_key(
    passphrase: str, N: int, m: int, wordlist: Wordlist | None = None
) -> Key:
    return key_from_int(decode_bits(passphrase, (N - 1) * m, wordlist), N, m)


@dataclass(frozen=True)
class WordStatus:
    word: str
    accepted: bool
    suggestion: str | None = None


@dataclass(frozen=True)
class EntryStatus:
    words: tuple[WordStatus, ...]
    complete: bool


def suggest(word: str, wordlist: Wordlist) -> str | None:
    """The unique closest list word within distance 2, if unambiguous.

    A distance-1 match is always unique (pairwise distance >= 3) and wins
    over any distance-2 candidates; at distance 2 two list words can tie,
    in which case no suggestion is offered.
    """
    best: list[str] = []
    best_d = 3
    for w in wordlist.words:
        d = levenshtein(w, word, 3)
        if d < best_d:
            best, best_d = [w], d
        elif d == best_d:
            best.append(w)
    return best[0] if best_d <= 2 and len(best) == 1 else None


def validate_entry(partial: str, wordlist: Wordlist | None = None) -> EntryStatus:
    """Per-word verdicts for a (possibly partial) passphrase entry.

    A trailing hyphen marks the last word as still being typed; everything
    before it is judged.  Never signals right/wrong passphrase, only
    whether words exist in the list.
    """
    wl = wordlist or load_wordlist()
    text = partial.strip()
    tokens = text.split("-") if text else []
    if tokens and tokens[-1] == "":
        tokens = tokens[:-1]
    statuses = []
    for tok in tokens:
        if wl.index_of(tok) is not None:
            statuses.append(WordStatus(tok, True))
        else:
            statuses.append(WordStatus(tok, False, suggest(tok, wl)))
    complete = bool(statuses) and all(s.accepted for s in statuses)
    return EntryStatus(tuple(statuses), complete)


def build_wordlist(
    base: Sequence[str],
    pool: Iterable[str],
    max_len: int,
    target: int,
    rng: random.Random,
) -> Wordlist:
    """Extend a distance-3 base list to `target` words using a pool.

    Pool survivors are the words at distance >= 3 from every base word and
    from every other pool word; after a length filter, the shortfall is
    sampled from them.  Distance >= 3 of the result follows case by case:
    base/base by precondition, survivor/survivor and base/survivor by the
    filter.
    """
    base = sorted(set(base))
    survivors = wordlist_survivors(base, pool, max_len)
    need = target - len(base)
    if need < 0:
        raise ContractViolation("target smaller than base list")
    if len(survivors) < need:
        raise InsufficientPoolError(
            f"need {need} words but only {len(survivors)} pool words survive"
        )
    chosen = rng.sample(survivors, need)
    return Wordlist(tuple(sorted(base + chosen)))


def wordlist_survivors(
    base: Sequence[str], pool: Iterable[str], max_len: int
) -> list[str]:
    """Pool words at distance >= 3 from the base and from the rest of the pool."""
    pool = sorted(set(pool))
    by_len: dict[int, list[str]] = {}
    for w in pool:
        by_len.setdefault(len(w), []).append(w)
    out = []
    for w in pool:
        if len(w) > max_len:
            continue
        # length difference >= 3 already implies distance >= 3
        near_pool = (
            v
            for L in range(len(w) - 2, len(w) + 3)
            for v in by_len.get(L, ())
            if v != w
        )
        if any(levenshtein(w, v, 3) < 3 for v in base):
            continue
        if any(levenshtein(w, v, 3) < 3 for v in near_pool):
            continue
        out.append(w)
    return out


def verify_wordlist(wordlist: Wordlist) -> dict:
    """Size, duplicate, and pairwise-distance report for a wordlist."""
    words = wordlist.words
    duplicates = len(words) - len(set(words))
    min_distance = None
    by_len: dict[int, list[str]] = {}
    for w in set(words):
        by_len.setdefault(len(w), []).append(w)
    bound = 3
    for w in set(words):
        for L in range(len(w) - 2, len(w) + 3):
            for v in by_len.get(L, ()):
                if v <= w:
                    continue
                d = levenshtein(w, v, bound)
                if min_distance is None or d < min_distance:
                    min_distance = d
    report = {
        "size": len(words),
        "duplicates": duplicates,
        "min_distance": min_distance,
        "max_word_len": max((len(w) for w in words), default=0),
        # hyphens or other separators inside a word would break passphrases
        "nonalpha": sum(1 for w in words if not w.isalpha()),
    }
    report["passed"] = (
        report["size"] == 1449
        and duplicates == 0
        and report["nonalpha"] == 0
        and (min_distance is None or min_distance >= 3)
    )
    return report
