"""Strongly k-universal hash family over GF(2^n).

A hash function is a vector of k random field coefficients (the public
database).  Evaluation computes the degree-(k-1) polynomial at the item
and truncates the result to m bits.  Coefficient i multiplies x^i.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import gf2
from .errors import ContractViolation


@dataclass(frozen=True)
class CoeffVector:
    """The public database: k uniform coefficients of width n."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ContractViolation("coefficient vector must be nonempty")
        for c in self.coeffs:
            if c < 0 or c >> self.n:
                raise ContractViolation(f"coefficient {c} does not fit in {self.n} bits")

    @property
    def k(self) -> int:
        return len(self.coeffs)


def sample_coeffs(n: int, k: int, rng: random.Random) -> CoeffVector:
    """Draw k independent uniform n-bit coefficients from the given rng."""
    if k < 1:
        raise ContractViolation("k must be at least 1")
    return CoeffVector(n, tuple(rng.getrandbits(n) for _ in range(k)))


def uhash_eval(db: CoeffVector, m: int, x: int) -> int:
    """Hash an n-bit item to m bits: trunc_m of the polynomial at x."""
    if m >= db.n:
        raise ContractViolation(f"m={m} must be smaller than n={db.n}")
    if x < 0 or x >> db.n:
        raise ContractViolation(f"item does not fit in {db.n} bits")
    f = gf2.field_for(db.n)
    y = gf2.gf_poly_eval(db.coeffs, x, f)
    return gf2.trunc_m(y, m, db.n)
