"""Command line front end: ``fermatq5 <subcommand> ...``.

Exit status: 0 success, 1 verification failure, 2 usage or I/O error.
"""
from __future__ import annotations

import argparse
import logging
import sys

from . import criterion, curve as curvemod, okring, primes, wendt
from .driver import default_threads, recheck_log, verify_range


def _cmd_witness(args) -> int:
    E = curvemod.load_curve(args.curve)
    p = args.p
    if args.n is not None:
        conds = criterion.theorem_conditions(p, args.n)
        for name, ok in conds.items():
            print(f"{name}: {'yes' if ok else 'NO'}")
        mode = criterion._mode(p, args.n * p + 1)
        print(f"p={p} n={args.n} q={args.n * p + 1} conditions={'hold' if all(conds.values()) else 'fail'} primality={mode}")
        return 0 if all(conds.values()) else 1
    n = criterion.theorem_witness(p, args.nmax)
    if n is not None:
        cert = criterion.WitnessCertificate(p, n, n * p + 1, "theorem", criterion._mode(p, n * p + 1))
    else:
        cert = criterion.decide(p, E, args.nmax)
    if cert is None:
        print(f"p={p} no witness found")
        return 1
    suffix = "" if cert.primality_mode == "deterministic" else " primality=probable"
    print(f"{cert}{suffix}")
    return 0


def _cmd_verify(args) -> int:
    if args.recheck:
        problems = recheck_log(args.recheck, curvemod.load_curve(args.curve))
        for lineno, msg in problems:
            print(f"line {lineno}: {msg}")
        print("recheck: ok" if not problems else f"recheck: {len(problems)} problem(s)")
        return 0 if not problems else 1
    if args.lo is None or args.hi is None or args.out is None:
        print("verify needs --from, --to and --out (or --recheck FILE)", file=sys.stderr)
        return 2
    summary = verify_range(
        args.lo, args.hi, args.out, n_max=args.nmax, threads=args.threads,
        shard_size=args.shard_size, resume=args.resume, curve_path=args.curve,
    )
    methods = ", ".join(f"{k}={v}" for k, v in sorted(summary.methods.items()))
    print(f"[{args.lo}, {args.hi}): {summary.certificates} certificates ({methods}); "
          f"{len(summary.failures)} failures; {summary.elapsed:.1f}s")
    if summary.failures:
        print("failures: " + " ".join(map(str, summary.failures)))
    return 0 if summary.ok else 1


def _cmd_wendt(args) -> int:
    w = wendt.wendt_exact(args.n, bound=args.bound)
    if args.factor:
        if w.value == 0:
            print("0")
        else:
            print(primes.format_factorization(*primes.factorize(w.value)))
    else:
        print(w.value)
    return 0


def _cmd_wendt_divides(args) -> int:
    if not primes.is_prime(args.q):
        print(f"{args.q} is not prime", file=sys.stderr)
        return 2
    print("true" if wendt.divides_wendt(args.q, args.n) else "false")
    return 0


def _cmd_aq(args) -> int:
    E = curvemod.load_curve(args.curve)
    tp = curvemod.trace_pair(E, args.q)
    print(f"q={tp.q} a_q={tp.traces[0]},{tp.traces[1]}")
    return 0


def _cmd_check_exceptional(args) -> int:
    E = curvemod.load_curve(args.curve)
    ev = criterion.exceptional_check(args.p, args.n, E)
    print(f"p={ev.p} n={ev.n} q={ev.q} prime={ev.q_prime} split={ev.q_split} "
          f"divides_W_n={ev.divides_wn} traces={list(ev.traces)} traces_mod_p={list(ev.traces_mod_p)}")
    print("ok" if ev.ok else "FAILED: " + "; ".join(ev.reasons))
    return 0 if ev.ok else 1


def _cmd_lemma1(args) -> int:
    classes = [args.pclass] if args.pclass is not None else list(okring.VALID_P_CLASSES)
    ok = True
    for pc in classes:
        rep = okring.lemma1_verify(pc)
        print(f"p = {pc} mod 12: {rep.triples} triples, {rep.orbits} orbits "
              f"({rep.even_orbits} with 2 | abc, {rep.odd_orbits} without), {len(rep.failing)} failing")
        for t in rep.failing:
            print("  failing orbit representative:", tuple(map(str, t)))
        ok &= rep.ok
    for name, holds in okring.lemma1_identities().items():
        print(f"{name}: {holds}")
    return 0 if ok else 1


def _cmd_lemma3(args) -> int:
    ok = True
    for case in okring.LEMMA3_CASES:
        rep = okring.lemma3_verify(case, args.samples, seed=args.seed)
        dist = ", ".join(f"{k}: {v}" for k, v in sorted(rep.observed.items()))
        print(f"{case}: {len(rep.mismatches)}/{rep.samples} mismatches; observed (v c4, v c6, v Δ) {dist}")
        if rep.remark_observed:
            print(f"  v(A²+AB+B²), v(A²+AC+C²), v(B²+BC+C²): {dict(rep.remark_observed)}")
        for A, B, vals in rep.mismatches[:3]:
            print(f"  e.g. A={A}, B={B} -> {vals}")
        ok &= rep.ok
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fermatq5", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("witness", help="find a certificate for one exponent")
    s.add_argument("p", type=int)
    s.add_argument("--n", type=int, help="check the theorem for this n instead of searching")
    s.add_argument("--nmax", type=int)
    s.add_argument("--curve")
    s.set_defaults(func=_cmd_witness)

    s = sub.add_parser("verify", help="certify every prime in a range")
    s.add_argument("--from", dest="lo", type=int)
    s.add_argument("--to", dest="hi", type=int)
    s.add_argument("--out")
    s.add_argument("--resume", action="store_true")
    s.add_argument("--threads", type=int, default=default_threads())
    s.add_argument("--nmax", type=int)
    s.add_argument("--shard-size", type=int, default=10_000)
    s.add_argument("--curve")
    s.add_argument("--recheck", metavar="FILE", help="re-validate an existing certificate log")
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("wendt", help="exact Wendt resultant W_n")
    s.add_argument("n", type=int)
    s.add_argument("--factor", action="store_true")
    s.add_argument("--bound", type=int, default=wendt.DEFAULT_EXACT_BOUND)
    s.set_defaults(func=_cmd_wendt)

    s = sub.add_parser("wendt-divides", help="does the prime q divide W_n (n | q-1)")
    s.add_argument("q", type=int)
    s.add_argument("n", type=int)
    s.set_defaults(func=_cmd_wendt_divides)

    s = sub.add_parser("aq", help="Frobenius traces of E at the primes above q")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--curve")
    s.set_defaults(func=_cmd_aq)

    s = sub.add_parser("check-exceptional", help="run the exceptional check for (p, n)")
    s.add_argument("p", type=int)
    s.add_argument("n", type=int)
    s.add_argument("--curve")
    s.set_defaults(func=_cmd_check_exceptional)

    s = sub.add_parser("lemma1-check", help="exhaustive mod-4 normalization check")
    s.add_argument("--pclass", type=int, choices=okring.VALID_P_CLASSES)
    s.set_defaults(func=_cmd_lemma1)

    s = sub.add_parser("lemma3-check", help="P2-valuations of the Frey invariants")
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=_cmd_lemma3)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(asctime)s %(levelname)s %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (criterion.ExponentError, wendt.WendtSizeError, curvemod.CurveDataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
