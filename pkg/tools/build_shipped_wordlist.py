#!/usr/bin/env python3
"""Regenerate the shipped wordlist from the EFF large wordlist.

The shipped list is the seeded random sample of the pool words that
survive the pairwise Levenshtein distance >= 3 filter.  Output is stable
for a fixed seed; the committed file records one such run.
"""
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from onionrecog.passcode import build_wordlist, verify_wordlist  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "src" / "onionrecog" / "data"
SEED = 1449

def main():
    pool = [
        line.split()[-1]
        for line in (DATA / "eff_large_wordlist.txt").read_text().splitlines()
        if line.strip()
    ]
    # hyphenated pool entries ("felt-tip", "t-shirt") would collide with
    # the passphrase separator; keep purely alphabetic words
    pool = [w for w in pool if w.isalpha()]
    wl = build_wordlist([], pool, max_len=9, target=1449, rng=random.Random(SEED))
    report = verify_wordlist(wl)
    print(report)
    assert report["passed"], report
    (DATA / "wordlist.txt").write_text("\n".join(wl.words) + "\n")
    print(f"wrote {len(wl.words)} words")

if __name__ == "__main__":
    main()
