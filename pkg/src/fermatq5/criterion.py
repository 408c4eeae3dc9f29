"""Decision procedures certifying Fermat's Last Theorem over Q(√5) for an exponent p.

Three routes produce a witness ``n`` with ``q = n·p + 1`` prime:

* ``theorem``: n ≡ 2 mod 4, n < p - 2, q ≡ ±1 mod 5 and q ∤ W_n;
* ``corollary2a`` / ``corollary2b``: the special cases n = 2 (p ≡ 4 mod 5) and
  n = 10, where W_2 = -3 and W_10 = -3·11⁹·31³ make the Wendt condition free;
* ``exceptional``: a fixed (p, n) for the eight primes the theorem misses, where
  in addition neither trace of E above q is ≡ ±2 mod p.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .curve import CurveOverK, trace_pair
from .primes import is_prime, primality_mode
from .wendt import divides_wendt

METHODS = ("theorem", "corollary2a", "corollary2b", "exceptional")

EXCEPTIONAL_TABLE: dict[int, int] = {
    11: 8,
    23: 20,
    53: 20,
    59: 20,
    67: 4,
    79: 100,
    83: 56,
    127: 4,
}

#: |W_10| = 3 · 11^9 · 31^3
W10_PRIMES = (3, 11, 31)


class ExponentError(ValueError):
    pass


@dataclass(frozen=True)
class WitnessCertificate:
    p: int
    n: int
    q: int
    method: str
    primality_mode: str = "deterministic"

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(", ", ": "))

    @classmethod
    def from_json(cls, line: str) -> WitnessCertificate:
        d = json.loads(line)
        return cls(int(d["p"]), int(d["n"]), int(d["q"]), str(d["method"]), str(d["primality_mode"]))

    def __str__(self):
        return f"p={self.p} n={self.n} q={self.q} method={self.method}"


@dataclass
class ExceptionalEvidence:
    p: int
    n: int
    q: int
    ok: bool
    q_prime: bool = False
    q_split: bool = False
    divides_wn: bool | None = None
    traces: tuple[int, ...] = ()
    traces_mod_p: tuple[int, ...] = ()
    reasons: list[str] = field(default_factory=list)


def _check_exponent(p: int) -> None:
    if p == 3:
        raise ExponentError(
            "p=3 is excluded: (9+√5)³ + (9-√5)³ = 12³ is a nontrivial solution over Q(√5)"
        )
    if p < 5 or not is_prime(p):
        raise ExponentError(f"exponent must be a prime >= 5, got {p}")


def _mode(*values: int) -> str:
    return "probable" if any(primality_mode(v) == "probable" for v in values) else "deterministic"


def theorem_conditions(p: int, n: int) -> dict[str, bool]:
    """Evaluate each hypothesis of the theorem for the pair (p, n)."""
    q = n * p + 1
    conds = {
        "n < p-2": n < p - 2,
        "n = 2 mod 4": n % 4 == 2,
        "q prime": is_prime(q),
    }
    conds["q = ±1 mod 5"] = q % 5 in (1, 4)
    conds["q does not divide W_n"] = conds["q prime"] and n >= 1 and not divides_wendt(q, n)
    return conds


def theorem_witness(p: int, n_max: int | None = None) -> int | None:
    """Smallest n satisfying the theorem for p, searching n < min(p - 2, n_max)."""
    _check_exponent(p)
    limit = p - 2 if n_max is None else min(p - 2, n_max)
    for n in range(2, limit, 4):
        q = n * p + 1
        if q % 5 not in (1, 4) or n % 6 == 0:
            continue
        if is_prime(q) and not divides_wendt(q, n):
            return n
    return None


def corollary2_check(p: int) -> str | None:
    _check_exponent(p)
    if p % 5 == 4 and is_prime(2 * p + 1):
        return "corollary2a"
    q = 10 * p + 1
    if is_prime(q):
        assert all(q % ell for ell in W10_PRIMES), "10p+1 cannot divide W_10 for p >= 5"
        return "corollary2b"
    return None


def exceptional_check(p: int, n: int, curve: CurveOverK | None) -> ExceptionalEvidence:
    """Check the pair (p, n) by the Wendt test plus the trace exclusion at q = np + 1.

    Multiplicative reduction of the Frey curve at a prime above q would force
    a_q(E) ≡ ±(q + 1) ≡ ±2 mod p; the check passes when q ∤ W_n and neither
    trace hits ±2 mod p.
    """
    if curve is None:
        raise RuntimeError("exceptional_check needs a loaded, validated curve")
    q = n * p + 1
    ev = ExceptionalEvidence(p, n, q, ok=False)
    if n % 2:
        ev.reasons.append("n is odd")
        return ev
    ev.q_prime = is_prime(q)
    if not ev.q_prime:
        ev.reasons.append("q is not prime")
        return ev
    ev.q_split = q % 5 in (1, 4)
    if not ev.q_split:
        ev.reasons.append("q is not split in K")
    ev.divides_wn = divides_wendt(q, n)
    if ev.divides_wn:
        ev.reasons.append("q divides W_n")
    if ev.reasons:
        return ev
    ev.traces = trace_pair(curve, q).traces
    ev.traces_mod_p = tuple(a % p for a in ev.traces)
    if any(r in (2 % p, (-2) % p) for r in ev.traces_mod_p):
        ev.reasons.append("a trace is ±2 mod p")
        return ev
    ev.ok = True
    return ev


def decide(p: int, curve: CurveOverK | None = None, n_max: int | None = None) -> WitnessCertificate | None:
    """First certificate from corollary 2, then the theorem, then the exceptional table.

    If ``n_max`` caps the theorem search and it fails, the search is retried
    without the cap.
    """
    _check_exponent(p)
    method = corollary2_check(p)
    if method:
        n = 2 if method == "corollary2a" else 10
        q = n * p + 1
        return WitnessCertificate(p, n, q, method, _mode(p, q))
    n = theorem_witness(p, n_max)
    if n is None and n_max is not None and n_max < p - 3:
        n = theorem_witness(p)
    if n is not None:
        q = n * p + 1
        return WitnessCertificate(p, n, q, "theorem", _mode(p, q))
    if p in EXCEPTIONAL_TABLE and curve is not None:
        n = EXCEPTIONAL_TABLE[p]
        if exceptional_check(p, n, curve).ok:
            q = n * p + 1
            return WitnessCertificate(p, n, q, "exceptional", _mode(p, q))
    return None


def verify_certificate(cert: WitnessCertificate, curve: CurveOverK | None = None) -> list[str]:
    """Re-derive every condition from the record; return the list of problems (empty if valid)."""
    problems = []
    p, n, q = cert.p, cert.n, cert.q
    if cert.method not in METHODS:
        return [f"unknown method {cert.method!r}"]
    if p < 5 or not is_prime(p):
        problems.append("p is not a prime >= 5")
    if q != n * p + 1:
        problems.append("q != n*p + 1")
    if not is_prime(q):
        problems.append("q is not prime")
    if cert.primality_mode != _mode(p, q):
        problems.append(f"primality_mode should be {_mode(p, q)}")
    if problems:
        return problems
    if cert.method == "theorem":
        problems += [name for name, ok in theorem_conditions(p, n).items() if not ok]
    elif cert.method == "corollary2a":
        if n != 2 or p % 5 != 4:
            problems.append("corollary2a needs n=2 and p = 4 mod 5")
    elif cert.method == "corollary2b":
        if n != 10:
            problems.append("corollary2b needs n=10")
        elif divides_wendt(q, 10):
            problems.append("q divides W_10")
    else:
        if EXCEPTIONAL_TABLE.get(p) != n:
            problems.append("(p, n) is not in the exceptional table")
        elif curve is None:
            problems.append("no curve supplied to recheck an exceptional certificate")
        else:
            problems += exceptional_check(p, n, curve).reasons
    return problems
