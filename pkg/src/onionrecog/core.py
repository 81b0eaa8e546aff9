"""The recognizer: a password-keyed set-membership fingerprint structure.

init draws a public coefficient vector (independent of the stored items),
hashes each item down to m bits, and builds the monic key polynomial whose
value on every hashed item equals the fingerprint.  test recomputes that
value for an arbitrary item.  The key and fingerprint are secrets that
callers must keep in volatile memory only; the coefficient vector is the
only persistent artifact.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import gf2
from .errors import ContractViolation, InitFailure
from .uhash import CoeffVector, sample_coeffs, uhash_eval

# Resampling budget when hashed items collide at init.  At the shipped
# parameters (N <= 5, m = 21) one draw collides with probability below
# 5e-6, so 64 rounds failing indicates a broken rng, not bad luck.
MAX_INIT_RESAMPLES = 64

UNBOUNDED = math.inf


@dataclass(frozen=True)
class RecognizerParams:
    """The tuple (n, N, q, m) governing one recognizer instance."""

    n: int  # item bit-length
    N: int  # stored-item count
    q: int  # phishing-attempt budget
    m: int  # fingerprint bit-length

    def __post_init__(self):
        if self.q < 1:
            raise ContractViolation("q must be at least 1")
        if self.m >= self.n:
            raise ContractViolation("m must be smaller than n")
        if not 1 < self.N < (1 << self.m):
            raise ContractViolation("N must satisfy 1 < N < 2^m")

    @property
    def k(self) -> int:
        """Coefficient count of the universal hash: q + N."""
        return self.q + self.N


@dataclass(frozen=True)
class SecurityLevel:
    """Collision-game bound: success probability epsilon at time bound t.

    t is informational; the construction is secure for unbounded
    adversaries, so t is always math.inf here.
    """

    epsilon: float
    t: float = UNBOUNDED

    def __post_init__(self):
        if not 0 < self.epsilon < 1:
            raise ContractViolation("epsilon must be in (0, 1)")


@dataclass(frozen=True)
class Key:
    """The N-1 secret m-bit coefficients a_1..a_{N-1} of the key polynomial."""

    m: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        for c in self.coeffs:
            if c < 0 or c >> self.m:
                raise ContractViolation(f"key coefficient {c} does not fit in {self.m} bits")

    @property
    def bits(self) -> int:
        """Total key length in bits: (N-1)*m."""
        return len(self.coeffs) * self.m


@dataclass(frozen=True)
class RecognizerInstance:
    params: RecognizerParams
    db: CoeffVector          # public, persisted
    key: Key                 # secret, volatile
    fingerprint: int         # secret, volatile, m bits


def build_key(hatted: Sequence[int], m: int) -> tuple[Key, int]:
    """Expand prod(x - x_i) + prod(x_i) over GF(2^m) into key and fingerprint.

    The result is monic of degree N with zero constant term; the returned
    key holds the coefficients of x^1..x^{N-1} and the fingerprint is the
    product of the hashed items, which is the polynomial's value on each
    of them.
    """
    N = len(hatted)
    if not 1 < N < (1 << m):
        raise ContractViolation("need 1 < N < 2^m hashed items")
    if len(set(hatted)) != N:
        raise ContractViolation("hashed items must be distinct")
    f = gf2.field_for(m)
    # poly[i] is the x^i coefficient of prod (x - root); char 2 makes -r = r
    poly = [1]
    for root in hatted:
        poly = [0] + poly
        for i in range(len(poly) - 1):
            poly[i] ^= gf2.gf_mul(poly[i + 1], root, f)
    y = 1
    for root in hatted:
        y = gf2.gf_mul(y, root, f)
    poly[0] ^= y  # constant term equals prod(roots); adding it zeroes it
    assert poly[0] == 0 and poly[N] == 1
    return Key(m, tuple(poly[1:N])), y


def rec_init(
    items: Iterable[int], params: RecognizerParams, rng: random.Random
) -> RecognizerInstance:
    """Build a recognizer instance for a set of N distinct n-bit items.

    The coefficient vector is drawn before and independently of the items,
    which is the whole basis of disclosure security.  If the hashed items
    collide, the vector is redrawn (bounded retries).
    """
    items = list(items)
    if len(set(items)) != len(items):
        raise ContractViolation("items must be distinct")
    if len(items) != params.N:
        raise ContractViolation(f"expected {params.N} items, got {len(items)}")
    for x in items:
        if x < 0 or x >> params.n:
            raise ContractViolation("item does not fit in n bits")

    for _ in range(MAX_INIT_RESAMPLES):
        db = sample_coeffs(params.n, params.k, rng)
        hatted = [uhash_eval(db, params.m, x) for x in items]
        if len(set(hatted)) == len(hatted):
            key, y = build_key(hatted, params.m)
            return RecognizerInstance(params, db, key, y)
    raise InitFailure(
        f"hashed items still collide after {MAX_INIT_RESAMPLES} resamples"
    )


def rec_test(db: CoeffVector, key: Key, x: int, params: RecognizerParams) -> int:
    """Fingerprint of an arbitrary item: p(h_db(x)) over GF(2^m).

    p is the monic key polynomial x^N + a_{N-1}x^{N-1} + ... + a_1 x; the
    leading term is implied by the key shape rather than stored.
    """
    if params.m != key.m or len(key.coeffs) != params.N - 1:
        raise ContractViolation("key does not match parameters")
    if db.k != params.k or db.n != params.n:
        raise ContractViolation("coefficient vector does not match parameters")
    hat = uhash_eval(db, params.m, x)
    f = gf2.field_for(params.m)
    coeffs = (0,) + key.coeffs + (1,)
    return gf2.gf_poly_eval(coeffs, hat, f)


def compute_epsilon(N: int, q: int, m: int) -> float:
    """Collision-game success bound 1 - (1 - N/2^m)^q, cancellation-safe."""
    if q < 0:
        raise ContractViolation("q must be nonnegative")
    if N >= (1 << m):
        raise ContractViolation("N must be smaller than 2^m")
    # -expm1(q*log1p(-N/2^m)) keeps two significant digits even when
    # N/2^m is around 1e-6.
    return -math.expm1(q * math.log1p(-N / (1 << m)))


def select_m(N: int, q: int, eps_target: float) -> int:
    """Smallest m with 2^m > N whose collision bound meets the target."""
    if not 0 < eps_target < 1:
        raise ContractViolation("eps_target must be in (0, 1)")
    m = 1
    while (1 << m) <= N:
        m += 1
    while compute_epsilon(N, q, m) > eps_target:
        m += 1
    return m


def format_eps(eps: float) -> str:
    """Two significant digits, truncated (not rounded), as d.d e+-xx."""
    if eps == 0:
        return "0"
    exp = math.floor(math.log10(eps))
    mant = eps / 10**exp
    mant = math.floor(mant * 10) / 10
    if mant >= 10:  # floating point edge right at a power of ten
        mant /= 10
        exp += 1
    return f"{mant:.1f}e{exp:+03d}"


def parameter_table(q: int = 100, m: int = 21, N_values: Sequence[int] = (2, 3, 4, 5)):
    """Rows (N, q, m, epsilon, key bits, fingerprint bits, words) per N."""
    from .passcode import words_needed  # local import: passcode depends on core types

    rows = []
    for N in N_values:
        key_bits = (N - 1) * m
        rows.append(
            {
                "N": N,
                "q": q,
                "m": m,
                "epsilon": compute_epsilon(N, q, m),
                "key_bits": key_bits,
                "fingerprint_bits": m,
                "words": words_needed(key_bits),
            }
        )
    return rows
