"""Command-line surface.

Mirrors the prototype flow: `init` stores the public database and shows
the passphrase and fingerprint once; `check` recomputes a fingerprint for
a domain from the database plus the interactively entered passphrase.
The tool never judges whether two fingerprints match - recognizing the
image is the human's job, and a machine-readable verdict would hand an
attacker a password-testing oracle.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import gamebench, passcode, store
from .core import (
    RecognizerParams,
    compute_epsilon,
    format_eps,
    parameter_table,
    rec_init,
    rec_test,
    select_m,
)
from .onionaddr import parse_onion
from .passcode import (
    build_wordlist,
    decode_key,
    encode_key,
    load_wordlist,
    validate_entry,
    verify_wordlist,
    words_needed,
)
from .visualhash import scene_of, svg_of

DEFAULT_Q = 100
DEFAULT_EPS = 3e-4
ITEM_BITS = 256


def _write_svg(path: Path, fingerprint: int, m: int) -> None:
    path.write_text(svg_of(scene_of(fingerprint, m)))


def cmd_init(args) -> int:
    domains = args.domain
    if len(domains) < 2:
        print(
            "error: need at least two domains (a single domain cannot hide in a set;"
            " add a second real domain or a random decoy)",
            file=sys.stderr,
        )
        return 2
    if len(set(d.strip().lower() for d in domains)) != len(domains):
        print("error: duplicate domains", file=sys.stderr)
        return 2
    try:
        items = [parse_onion(d) for d in domains]
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if len(set(items)) != len(items):
        print("error: domains resolve to the same service key", file=sys.stderr)
        return 2

    N = len(items)
    m = select_m(N, args.q, args.eps)
    params = RecognizerParams(n=ITEM_BITS, N=N, q=args.q, m=m)
    if args.seed is not None:
        print(
            "WARNING: --seed makes the database and key fully predictable;"
            " use for tests only, never for real domains",
            file=sys.stderr,
        )
        rng = random.Random(int(args.seed, 16))
    else:
        rng = random.SystemRandom()
    inst = rec_init(items, params, rng)

    db_path = Path(args.db)
    store.save_db(inst, db_path)
    svg_path = db_path.with_suffix(".svg")
    _write_svg(svg_path, inst.fingerprint, m)

    print(f"database written to {db_path} ({store.db_file_size(params)} bytes)")
    print(f"parameters: N={N} q={args.q} m={m} epsilon<={format_eps(compute_epsilon(N, args.q, m))}")
    print(f"fingerprint: {inst.fingerprint:0{(m + 3) // 4}x}")
    print(f"fingerprint image: {svg_path}")
    print()
    print("passphrase (write nothing down; you will re-enter it after restarts):")
    print(f"  {encode_key(inst.key)}")
    return 0


def _prompt_passphrase(N: int, m: int):
    expected = words_needed((N - 1) * m)
    wl = load_wordlist()
    while True:
        entry = input(f"passphrase ({expected} words, hyphen-separated): ").strip()
        status = validate_entry(entry, wl)
        bad = [s for s in status.words if not s.accepted]
        if bad:
            for s in bad:
                hint = f" (did you mean {s.suggestion!r}?)" if s.suggestion else ""
                print(f"  unknown word {s.word!r}{hint}", file=sys.stderr)
            continue
        if len(status.words) != expected:
            print(f"  expected {expected} words, got {len(status.words)}", file=sys.stderr)
            continue
        try:
            return decode_key(entry, N, m, wl)
        except ValueError as e:
            print(f"  {e}", file=sys.stderr)


def cmd_check(args) -> int:
    try:
        params, db = store.load_db(args.db)
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        item = parse_onion(args.domain)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    key = _prompt_passphrase(params.N, params.m)
    y = rec_test(db, key, item, params)
    svg_path = Path(args.db).with_suffix(".session.svg")
    _write_svg(svg_path, y, params.m)
    print(f"fingerprint: {y:0{(params.m + 3) // 4}x}")
    print(f"fingerprint image: {svg_path}")
    print("compare the image against your reference; only you can judge the match")
    return 0


def cmd_params(args) -> int:
    Ns = [args.N] if args.N else [2, 3, 4, 5]
    m = select_m(max(Ns), args.q, args.eps)
    rows = parameter_table(q=args.q, m=m, N_values=Ns)
    print(f"{'N':>3} {'q':>5} {'m':>3} {'epsilon':>9} {'|k|':>4} {'fp bits':>7} {'words':>5}")
    for r in rows:
        print(
            f"{r['N']:>3} {r['q']:>5} {r['m']:>3} {format_eps(r['epsilon']):>9}"
            f" {r['key_bits']:>4} {r['fingerprint_bits']:>7} {r['words']:>5}"
        )
    return 0


def _read_words(path: str) -> list[str]:
    return [w.split()[-1] for w in Path(path).read_text().splitlines() if w.strip()]


def cmd_wordlist(args) -> int:
    if args.wordlist_cmd == "verify":
        if args.file:
            wl = passcode.Wordlist(tuple(_read_words(args.file)))
        else:
            wl = load_wordlist()
        report = verify_wordlist(wl)
        for k in sorted(report):
            print(f"{k}: {report[k]}")
        return 0 if report["passed"] else 1
    # build
    base = _read_words(args.base) if args.base else []
    pool = _read_words(args.pool)
    wl = build_wordlist(base, pool, args.max_len, args.target, random.Random(args.seed))
    out = Path(args.out)
    out.write_text("\n".join(wl.words) + "\n")
    print(f"wrote {len(wl.words)} words to {out}")
    return 0


def cmd_bench(args) -> int:
    if args.bench_cmd == "collision":
        params = RecognizerParams(n=args.n, N=args.N, q=args.q, m=args.m)
        strategies = {
            "distinct-random": gamebench.DistinctRandomQueries,
            "near-miss": gamebench.NearMissQueries,
            "adaptive-repeat": gamebench.AdaptiveRepeatQueries,
        }
        report = gamebench.run_collision_mc(
            params, strategies[args.adversary](), args.trials, args.seed
        )
        print(report.to_json() if args.json else report.to_table())
        return 0
    if args.bench_cmd == "universality":
        dev = gamebench.universality_census(args.n, args.m, args.k)
        result = {"n": args.n, "m": args.m, "k": args.k, "max_deviation": dev}
        if args.json:
            import json

            print(json.dumps(result, sort_keys=True, separators=(",", ":")))
        else:
            for k in sorted(result):
                print(f"{k}: {result[k]}")
        return 0 if dev == 0 else 1
    # lemma
    rng = random.Random(args.seed)
    ok = True
    for _ in range(args.rounds):
        roots = rng.sample(range(1 << args.m), args.roots)
        ok &= gamebench.lemma_scan(args.m, roots)
    print(f"lemma preimage scans: {'all exact' if ok else 'FAILED'}")
    return 0 if ok else 1


def cmd_bridge(args) -> int:
    from .bridge import serve

    serve(args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="onionrecog",
        description="recognize previously chosen onion domains by short visual fingerprints",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("init", help="store a new recognizer for a set of domains")
    sp.add_argument("--domain", action="append", required=True, help="onion domain (repeat)")
    sp.add_argument("--q", type=int, default=DEFAULT_Q)
    sp.add_argument("--eps", type=float, default=DEFAULT_EPS)
    sp.add_argument("--db", default="recognizer.db")
    sp.add_argument("--seed", help="hex seed, TESTS ONLY: makes everything predictable")
    sp.set_defaults(func=cmd_init)

    sp = sub.add_parser("check", help="recompute a domain's fingerprint")
    sp.add_argument("domain")
    sp.add_argument("--db", required=True)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("params", help="print the parameter table")
    sp.add_argument("--N", type=int)
    sp.add_argument("--q", type=int, default=DEFAULT_Q)
    sp.add_argument("--eps", type=float, default=DEFAULT_EPS)
    sp.set_defaults(func=cmd_params)

    sp = sub.add_parser("wordlist", help="wordlist tools")
    wsub = sp.add_subparsers(dest="wordlist_cmd", required=True)
    v = wsub.add_parser("verify")
    v.add_argument("--file", help="verify this file instead of the shipped list")
    b = wsub.add_parser("build")
    b.add_argument("--base", help="words already at pairwise distance >= 3")
    b.add_argument("--pool", required=True)
    b.add_argument("--max-len", type=int, default=9)
    b.add_argument("--target", type=int, default=1449)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_wordlist)

    sp = sub.add_parser("bench", help="security-game benchmarks")
    bsub = sp.add_subparsers(dest="bench_cmd", required=True)
    c = bsub.add_parser("collision")
    c.add_argument("--n", type=int, default=32)
    c.add_argument("--N", type=int, default=2)
    c.add_argument("--q", type=int, default=16)
    c.add_argument("--m", type=int, default=8)
    c.add_argument("--trials", type=int, default=100000)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument(
        "--adversary",
        choices=["distinct-random", "near-miss", "adaptive-repeat"],
        default="distinct-random",
    )
    c.add_argument("--json", action="store_true")
    u = bsub.add_parser("universality")
    u.add_argument("--n", type=int, default=4)
    u.add_argument("--m", type=int, default=2)
    u.add_argument("--k", type=int, default=2)
    u.add_argument("--json", action="store_true")
    le = bsub.add_parser("lemma")
    le.add_argument("--m", type=int, default=8)
    le.add_argument("--roots", type=int, default=2)
    le.add_argument("--rounds", type=int, default=1000)
    le.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("bridge", help="local bridge for the web verifier")
    brsub = sp.add_subparsers(dest="bridge_cmd", required=True)
    s = brsub.add_parser("serve")
    s.add_argument("--port", type=int, default=8741)
    sp.set_defaults(func=cmd_bridge)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
