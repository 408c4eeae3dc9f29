import pytest

from fermatq5.criterion import (
    EXCEPTIONAL_TABLE, ExponentError, WitnessCertificate, corollary2_check, decide, exceptional_check,
    theorem_conditions, theorem_witness, verify_certificate,
)
from fermatq5.primes import is_prime, primes_in_range
from fermatq5.wendt import wendt_exact

# smallest theorem witness n for each p < 100 (None: the theorem does not apply)
WITNESS_TABLE = {
    5: 2, 7: None, 11: None, 13: 10, 17: 14, 19: 10, 23: None, 29: 2, 31: 10, 37: 34, 41: 38,
    43: 10, 47: 14, 53: None, 59: None, 61: 58, 67: None, 71: 38, 73: 46, 79: None, 83: None,
    89: 2, 97: 10,
}


def oracle_theorem_witness(p):
    """Smallest n by the definition, with q | W_n decided by exact division of W_n."""
    for n in range(1, p - 2):
        q = n * p + 1
        if n % 4 == 2 and is_prime(q) and q % 5 in (1, 4) and wendt_exact(n, bound=10**6).value % q:
            return n
    return None


@pytest.mark.parametrize("p", [p for p in primes_in_range(5, 200)])
def test_theorem_witness_is_minimal(p):
    assert theorem_witness(p) == oracle_theorem_witness(p)


def test_witness_table():
    got = {p: theorem_witness(p) for p in primes_in_range(5, 100)}
    assert got == WITNESS_TABLE
    for p, n in got.items():
        if n is not None:
            assert all(theorem_conditions(p, n).values())


def test_theorem_failures_below_1000():
    failures = {p for p in primes_in_range(5, 1000) if theorem_witness(p) is None}
    assert failures == {7, 11, 23, 53, 59, 67, 79, 83, 127}


def test_n_max_caps_search():
    assert theorem_witness(13, n_max=6) is None
    assert theorem_witness(13, n_max=11) == 10
    # decide retries without the cap
    assert decide(13, n_max=6).n == 10


def test_corollary2():
    assert corollary2_check(29) == "corollary2a"   # 29 = 4 mod 5, 59 prime
    assert corollary2_check(13) == "corollary2b"   # 131 prime
    assert corollary2_check(7) == "corollary2b"    # 71 prime
    assert corollary2_check(11) is None            # 11 = 1 mod 5 and 111 = 3 * 37


def test_exceptional_examples(curve):
    ev = exceptional_check(11, 8, curve)
    assert ev.ok and ev.q == 89 and ev.traces == (-6, -6) and ev.traces_mod_p == (5, 5)
    ev = exceptional_check(127, 4, curve)
    assert ev.ok and ev.q == 509
    ev = exceptional_check(11, 6, curve)  # 67 is prime but inert, and 6 | n puts q | W_6 = 0
    assert not ev.ok and "q is not split in K" in ev.reasons and "q divides W_n" in ev.reasons
    ev = exceptional_check(11, 2, curve)  # 23 inert
    assert not ev.ok
    ev = exceptional_check(11, 4, curve)  # 45 composite
    assert ev.reasons == ["q is not prime"]
    with pytest.raises(RuntimeError):
        exceptional_check(11, 8, None)


@pytest.mark.parametrize("p,n", sorted(EXCEPTIONAL_TABLE.items()))
def test_exceptional_table_passes(curve, p, n):
    ev = exceptional_check(p, n, curve)
    assert ev.ok, ev.reasons
    assert all(r not in (2, p - 2) for r in ev.traces_mod_p)


def test_exceptional_catches_trace_hit(curve):
    # q = 41 = 8*5 + 1 is split, 41 does not divide W_8, and a_41 = 2
    ev = exceptional_check(5, 8, curve)
    assert not ev.ok and ev.reasons == ["a trace is ±2 mod p"]


def test_decide_routes(curve):
    c = decide(29, curve)
    assert (c.method, c.n, c.q) == ("corollary2a", 2, 59)
    c = decide(83, curve)
    assert (c.method, c.n, c.q) == ("exceptional", 56, 4649)
    c = decide(7, curve)
    assert (c.method, c.n, c.q) == ("corollary2b", 10, 71)
    c = decide(127, curve)
    assert (c.method, c.n, c.q) == ("exceptional", 4, 509)
    # without a curve the exceptional primes stay undecided
    assert decide(83) is None


def test_decide_never_exceptional_outside_table(curve):
    for p in primes_in_range(5, 3000):
        c = decide(p, curve)
        assert c is not None, p
        assert (c.method == "exceptional") == (p in EXCEPTIONAL_TABLE)


def test_exponent_errors():
    with pytest.raises(ExponentError, match="12"):
        theorem_witness(3)
    for bad in (2, 4, 9, 1):
        with pytest.raises(ExponentError):
            decide(bad)


def test_certificate_roundtrip_and_verify(curve):
    for p in primes_in_range(5, 400):
        c = decide(p, curve)
        assert WitnessCertificate.from_json(c.to_json()) == c
        assert verify_certificate(c, curve) == []


def test_verify_certificate_rejects_tampering(curve):
    good = decide(13, curve)
    assert verify_certificate(WitnessCertificate(13, 10, 132, "theorem"), curve)
    assert verify_certificate(WitnessCertificate(13, 6, 79, "theorem"), curve)  # 6 | n, so 79 | W_6 = 0
    assert verify_certificate(WitnessCertificate(13, 10, 131, "magic"), curve) == ["unknown method 'magic'"]
    assert verify_certificate(WitnessCertificate(13, 10, 131, "theorem", "probable"), curve)
    assert verify_certificate(WitnessCertificate(13, 10, 131, "corollary2a"), curve)
    assert verify_certificate(WitnessCertificate(11, 8, 89, "exceptional")) == [
        "no curve supplied to recheck an exceptional certificate"]
    assert verify_certificate(WitnessCertificate(13, 2, 27, "exceptional"), curve)
    assert verify_certificate(good, curve) == []


def test_certificate_format():
    c = WitnessCertificate(13, 10, 131, "theorem")
    assert str(c) == "p=13 n=10 q=131 method=theorem"
    assert c.to_json() == '{"p": 13, "n": 10, "q": 131, "method": "theorem", "primality_mode": "deterministic"}'


def test_googol_exponent():
    p = 10**100 + 267
    assert is_prime(p)
    n = theorem_witness(p, n_max=2000)
    assert n == 754
    conds = theorem_conditions(p, n)
    assert all(conds.values())
    c = decide(p, n_max=2000)
    assert c.n == n and c.method == "theorem" and c.primality_mode == "probable"
