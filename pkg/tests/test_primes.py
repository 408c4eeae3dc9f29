import math

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from fermatq5.primes import (
    FactorizationError, factorize, format_factorization, is_prime, primality_mode, primes_in_range,
)


def plain_sieve(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i::i] = bytearray(len(range(i * i, limit + 1, i)))
    return flags


def test_is_prime_examples():
    assert is_prime(89)
    assert not is_prime(1)
    assert not is_prime(341)  # 11 * 31, base-2 pseudoprime


def test_is_prime_agrees_with_sieve_up_to_a_million():
    flags = plain_sieve(10**6)
    assert [m for m in range(1, 10**6 + 1) if is_prime(m) != bool(flags[m])] == []


@pytest.mark.parametrize("m", [
    3215031751,            # strong pseudoprime to bases 2, 3, 5, 7
    3825123056546413051,   # strong pseudoprime to bases up to 23
    318665857834031151167461,  # strong pseudoprime to bases up to 37
    2**64 - 59,            # largest prime below 2^64
    2**89 - 1,
    10**100 + 267,
])
def test_is_prime_hard_cases(m):
    assert is_prime(m) == sympy.isprime(m)


def test_primality_mode_switches_at_2_64():
    assert primality_mode(2**64 - 59) == "deterministic"
    assert primality_mode(2**64 + 13) == "probable"


def test_primes_in_range_small():
    assert list(primes_in_range(5, 20)) == [5, 7, 11, 13, 17, 19]
    assert list(primes_in_range(0, 3)) == [2]
    assert list(primes_in_range(20, 20)) == []


def test_prime_count_below_1e5():
    flags = plain_sieve(10**5)
    assert sum(flags) == 9592
    assert sum(1 for _ in primes_in_range(1, 10**5)) == 9592


def test_primes_near_1e7_cross_checked():
    got = list(primes_in_range(10**7 - 100, 10**7))
    assert got == [m for m in range(10**7 - 100, 10**7) if is_prime(m)]
    assert got  # 9999901 and friends


@pytest.mark.parametrize("segment", [7, 64, 1000, 1 << 20])
def test_segment_size_does_not_change_output(segment):
    lo, hi = 990, 5000
    got = list(primes_in_range(lo, hi, segment=segment))
    assert got == [m for m in range(lo, hi) if is_prime(m)]
    assert all(a < b for a, b in zip(got, got[1:]))


def test_factorize_examples():
    assert 3**7 * 5**3 * 17**3 == 1343091375
    assert factorize(1343091375) == (1, [(3, 7), (5, 3), (17, 3)])
    assert factorize(59) == (1, [(59, 1)])
    assert factorize(-3) == (-1, [(3, 1)])
    assert format_factorization(-1, [(3, 1), (11, 9), (31, 3)]) == "-3 * 11^9 * 31^3"


def test_factorize_needs_rho():
    m = (2**31 - 1) * 1000000007 * 998244353
    assert factorize(m) == (1, [(998244353, 1), (1000000007, 1), (2**31 - 1, 1)])


def test_factorize_failure_signal():
    p, q = 2**61 - 1, 2**89 - 1
    with pytest.raises(FactorizationError) as info:
        factorize(6 * p * q, rho_budget=1000)
    assert info.value.partial == [(2, 1), (3, 1)]


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=-10**15, max_value=10**15).filter(bool))
def test_factorize_recomposes(m):
    sign, factors = factorize(m)
    assert sign * math.prod(p**e for p, e in factors) == m
    assert all(is_prime(p) and e >= 1 for p, e in factors)
    assert [p for p, _ in factors] == sorted(p for p, _ in factors)
    assert dict(factors) == sympy.factorint(abs(m))
