"""Executable forms of the recognizer security games.

The collision game drives real init/test machinery with pluggable
adversary strategies and compares empirical success frequency against the
closed-form bound.  The disclosure game is replayed as its testable core:
the persisted coefficient vector is byte-identical regardless of which
item set was stored under a shared seed.  Exhaustive scans check strong
universality and the key polynomial's preimage property at small widths.

All randomness flows from the caller's seed; per-trial sub-seeds are
derived with SHA-256 over "seed:trial", so trials are order-independent
and could run in parallel.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from . import gf2
from .core import (
    RecognizerParams,
    build_key,
    compute_epsilon,
    rec_init,
    rec_test,
)
from .errors import ContractViolation
from .uhash import CoeffVector, uhash_eval

CENSUS_GUARD_BITS = 20  # refuse universality censuses above 2^20 vectors


def trial_seed(seed: int, trial: int) -> int:
    """Documented split function: sub-seed for one trial."""
    digest = hashlib.sha256(f"{seed}:{trial}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


@dataclass(frozen=True)
class CollisionReport:
    n: int
    N: int
    q: int
    m: int
    trials: int
    successes: int
    empirical: float
    bound: float
    seed: int
    adversary: str
    engine: str

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))

    def to_table(self) -> str:
        d = asdict(self)
        width = max(len(k) for k in d)
        return "\n".join(f"{k:<{width}}  {d[k]}" for k in sorted(d))


class OracleSession:
    """The 1-bit membership oracle, with the game's query accounting."""

    def __init__(self, inst, members: set[int], budget: int):
        self._inst = inst
        self._members = members
        self._budget = budget
        self.queries: set[int] = set()
        self.won = False

    def __call__(self, x: int) -> int:
        self.queries.add(x)
        hit = 1 if rec_test(self._inst.db, self._inst.key, x, self._inst.params) == self._inst.fingerprint else 0
        if hit and x not in self._members and len(self.queries) <= self._budget:
            self.won = True
        return hit

    @property
    def over_budget(self) -> bool:
        return len(self.queries) > self._budget


class DistinctRandomQueries:
    """Queries q distinct uniform non-members; the Theorem's equality case."""

    name = "distinct-random"

    def choose_items(self, params: RecognizerParams, rng: random.Random) -> list[int]:
        return _distinct_items(params.n, params.N, rng)

    def attack(self, params, members, oracle, rng: random.Random) -> None:
        seen = set(members)
        for _ in range(params.q):
            x = rng.getrandbits(params.n)
            while x in seen:
                x = rng.getrandbits(params.n)
            seen.add(x)
            oracle(x)


class NearMissQueries:
    """Queries items at Hamming distance 1 from the stored members."""

    name = "near-miss"

    def choose_items(self, params: RecognizerParams, rng: random.Random) -> list[int]:
        return _distinct_items(params.n, params.N, rng)

    def attack(self, params, members, oracle, rng: random.Random) -> None:
        members = list(members)
        flips = [(i, b) for i in range(len(members)) for b in range(params.n)]
        rng.shuffle(flips)
        asked = 0
        member_set = set(members)
        for i, b in flips:
            if asked >= params.q:
                break
            x = members[i] ^ (1 << b)
            if x in member_set:
                continue
            oracle(x)
            asked += 1


class AdaptiveRepeatQueries:
    """Random distinct queries; re-asks any item the oracle accepted."""

    name = "adaptive-repeat"

    def choose_items(self, params: RecognizerParams, rng: random.Random) -> list[int]:
        return _distinct_items(params.n, params.N, rng)

    def attack(self, params, members, oracle, rng: random.Random) -> None:
        seen = set(members)
        for _ in range(params.q):
            x = rng.getrandbits(params.n)
            while x in seen:
                x = rng.getrandbits(params.n)
            seen.add(x)
            if oracle(x):
                oracle(x)  # re-query costs nothing: Q is a set

def _distinct_items(n: int, count: int, rng: random.Random) -> list[int]:
    items: set[int] = set()
    while len(items) < count:
        items.add(rng.getrandbits(n))
    return sorted(items)


def run_collision_mc(
    params: RecognizerParams,
    adversary,
    trials: int,
    seed: int,
) -> CollisionReport:
    """Monte Carlo estimate of the collision game's success frequency.

    For the distinct-random adversary at machine-word widths the trials
    run on a vectorized engine whose field arithmetic is checked against
    gf2 elsewhere in the test suite; other adversaries run through the
    recognizer API trial by trial.  Both engines are deterministic per
    seed.
    """
    if trials < 1:
        raise ContractViolation("trials must be at least 1")
    if (
        isinstance(adversary, DistinctRandomQueries)
        and params.n <= 32
        and params.n in gf2.SPECS
        and params.m in gf2.SPECS
    ):
        successes = _collision_mc_vectorized(params, trials, seed)
        engine = "vectorized"
    else:
        successes = 0
        for t in range(trials):
            rng = random.Random(trial_seed(seed, t))
            members = adversary.choose_items(params, rng)
            inst = rec_init(members, params, rng)
            oracle = OracleSession(inst, set(members), params.q)
            adversary.attack(params, members, oracle, rng)
            if oracle.won and not oracle.over_budget:
                successes += 1
        engine = "api"
    return CollisionReport(
        n=params.n,
        N=params.N,
        q=params.q,
        m=params.m,
        trials=trials,
        successes=successes,
        empirical=successes / trials,
        bound=compute_epsilon(params.N, params.q, params.m),
        seed=seed,
        adversary=adversary.name,
        engine=engine,
    )


# -- vectorized engine (numpy, one lane per trial) --------------------------

def _vec_clmul_reduce(acc: np.ndarray, x: np.ndarray, f: gf2.FieldSpec) -> np.ndarray:
    """Lane-wise acc*x in f; operands must be field elements of width <= 32."""
    w = f.width
    p = np.zeros_like(acc)
    for i in range(w):
        bit = (x >> np.uint64(i)) & np.uint64(1)
        p ^= (acc << np.uint64(i)) * bit
    tail_exps = [e for e in f.reduction if e != w]
    mask = np.uint64((1 << w) - 1)
    while np.any(p >> np.uint64(w)):
        top = p >> np.uint64(w)
        p &= mask
        for e in tail_exps:
            p ^= top << np.uint64(e)
    return p


def _vec_uhash(db: np.ndarray, items: np.ndarray, n: int, m: int) -> np.ndarray:
    """Horner evaluation of each trial's polynomial at each item, truncated.

    db has shape (T, k); items (T, j).  Returns (T, j) of m-bit hats.
    """
    f = gf2.field_for(n)
    k = db.shape[1]
    acc = np.broadcast_to(db[:, k - 1 : k], items.shape).copy()
    for j in range(k - 2, -1, -1):
        acc = _vec_clmul_reduce(acc, items, f) ^ db[:, j : j + 1]
    return acc & np.uint64((1 << m) - 1)


def _redraw_until_distinct(rng, rows: np.ndarray, high: int) -> np.ndarray:
    """Make every row of `rows` contain distinct values (tiny redraw loop)."""
    while True:
        s = np.sort(rows, axis=1)
        bad = np.any(s[:, 1:] == s[:, :-1], axis=1)
        if not np.any(bad):
            return rows
        rows[bad] = rng.integers(0, high, size=(int(bad.sum()), rows.shape[1]), dtype=np.uint64)


def _collision_mc_vectorized(params: RecognizerParams, trials: int, seed: int) -> int:
    n, N, q, m = params.n, params.N, params.q, params.m
    rng = np.random.default_rng(seed)
    fm = gf2.field_for(m)

    items = rng.integers(0, 1 << n, size=(trials, N + q), dtype=np.uint64)
    items = _redraw_until_distinct(rng, items, 1 << n)

    db = rng.integers(0, 1 << n, size=(trials, params.k), dtype=np.uint64)
    hats = _vec_uhash(db, items, n, m)
    # init resamples the coefficient vector until member hats are distinct
    while True:
        mh = np.sort(hats[:, :N], axis=1)
        bad = np.any(mh[:, 1:] == mh[:, :-1], axis=1)
        if not np.any(bad):
            break
        idx = np.flatnonzero(bad)
        db[idx] = rng.integers(0, 1 << n, size=(len(idx), params.k), dtype=np.uint64)
        hats[idx] = _vec_uhash(db[idx], items[idx], n, m)

    member_hats = hats[:, :N]
    query_hats = hats[:, N:]

    # expand prod(xi - root_i) lane-wise over GF(2^m); poly[d] is the x^d coeff
    poly = [np.ones(trials, dtype=np.uint64)]
    for r in range(N):
        root = member_hats[:, r]
        poly.insert(0, np.zeros(trials, dtype=np.uint64))
        for d in range(len(poly) - 1):
            poly[d] ^= _vec_clmul_reduce(poly[d + 1], root, fm)
    y = poly[0].copy()  # constant term equals the fingerprint prod(hats)

    # test each query: evaluate the monic key polynomial at its hat
    acc = np.ones_like(query_hats)
    for d in range(N - 1, 0, -1):
        acc = _vec_clmul_reduce(acc, query_hats, fm) ^ poly[d][:, None]
    acc = _vec_clmul_reduce(acc, query_hats, fm)  # zero constant term
    wins = np.any(acc == y[:, None], axis=1)
    return int(wins.sum())


def disclosure_replay(
    M0: Sequence[int], M1: Sequence[int], params: RecognizerParams, seed: int
) -> bool:
    """Whether both item sets yield byte-identical coefficient vectors.

    This is the literal mechanism behind disclosure security: the vector
    is drawn before, and independently of, the stored items.  The full
    distinguishing game with an unbounded adversary is not a finite
    experiment; this replay is its testable core.
    """
    if len(M0) != len(M1) or len(M0) != params.N:
        raise ContractViolation("item sets must both have exactly N items")
    db0 = rec_init(M0, params, random.Random(seed)).db
    db1 = rec_init(M1, params, random.Random(seed)).db
    return db0 == db1


def universality_census(n: int, m: int, k: int) -> int:
    """Max deviation of any (inputs -> outputs) cell count from uniformity.

    Enumerates all 2^(n*k) coefficient vectors for fixed distinct inputs
    x_i = i and counts every output tuple.  Strong k-universality holds
    exactly when the deviation is 0.
    """
    if k < 1:
        raise ContractViolation("k must be at least 1")
    if m >= n:
        raise ContractViolation("m must be smaller than n")
    if n * k > CENSUS_GUARD_BITS:
        raise ContractViolation(
            f"census over 2^{n * k} vectors exceeds the 2^{CENSUS_GUARD_BITS} guard"
        )
    if k > (1 << n):
        raise ContractViolation("fewer field points than inputs")
    xs = list(range(k))
    counts: dict[tuple[int, ...], int] = {}
    total = 1 << (n * k)
    n_mask = (1 << n) - 1
    for vec in range(total):
        coeffs = tuple((vec >> (n * i)) & n_mask for i in range(k))
        db = CoeffVector(n, coeffs)
        outs = tuple(uhash_eval(db, m, x) for x in xs)
        counts[outs] = counts.get(outs, 0) + 1
    expected = total // (1 << (m * k))
    deviation = 0
    for outs_count in counts.values():
        deviation = max(deviation, abs(outs_count - expected))
    if len(counts) < (1 << (m * k)):  # an output tuple never hit at all
        deviation = max(deviation, expected)
    return deviation


def lemma_scan(m: int, roots: Sequence[int]) -> bool:
    """Exhaustively check the key polynomial's preimage set equals the roots."""
    if m > 16:
        raise ContractViolation("lemma scan limited to m <= 16")
    if len(set(roots)) != len(roots):
        raise ContractViolation("roots must be distinct")
    key, y = build_key(list(roots), m)
    f = gf2.field_for(m)
    coeffs = (0,) + key.coeffs + (1,)
    preimage = {
        x for x in range(1 << m) if gf2.gf_poly_eval(coeffs, x, f) == y
    }
    return preimage == set(roots)
