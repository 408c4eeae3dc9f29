"""Primality testing, segmented sieving and factorization."""
from __future__ import annotations

import math
import random
from typing import Iterator

import numpy as np

#: Miller-Rabin with these bases is exact for every n < 3.3e24 (> 2**64)
DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
DETERMINISTIC_LIMIT = 1 << 64
#: random rounds above the limit; error probability <= 4**-64 = 2**-128
PROBABLE_ROUNDS = 64

DEFAULT_SEGMENT = 1 << 20

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


class FactorizationError(RuntimeError):
    """A cofactor resisted trial division and Pollard rho within the budget."""

    def __init__(self, m, partial, cofactor):
        super().__init__(f"could not factor cofactor {cofactor} of {m}")
        self.partial = partial
        self.cofactor = cofactor


def _strong_probable_prime(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(m: int) -> bool:
    """Deterministic below 2**64; probabilistic (error < 2**-128) above.

    Use :func:`primality_mode` to learn which regime applied.
    """
    if m < 2:
        return False
    for sp in _SMALL_PRIMES:
        if m % sp == 0:
            return m == sp
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if m < DETERMINISTIC_LIMIT:
        bases = DETERMINISTIC_BASES
    else:
        # seeded by m so repeated runs agree
        rng = random.Random(m)
        bases = DETERMINISTIC_BASES + tuple(rng.randrange(2, m - 1) for _ in range(PROBABLE_ROUNDS))
    return all(_strong_probable_prime(m, d, s, a) for a in bases)


def primality_mode(m: int) -> str:
    return "deterministic" if m < DETERMINISTIC_LIMIT else "probable"


def simple_sieve(limit: int) -> np.ndarray:
    """All primes <= limit."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p::p] = False
    return np.flatnonzero(flags).astype(np.int64)


def primes_in_range(lo: int, hi: int, segment: int = DEFAULT_SEGMENT) -> Iterator[int]:
    """Yield the primes in ``[lo, hi)`` in ascending order.

    Segmented sieve: memory is O(segment + sqrt(hi)).
    """
    if lo > hi:
        raise ValueError("lo > hi")
    lo = max(lo, 2)
    if hi <= lo:
        return
    base = simple_sieve(math.isqrt(hi - 1) + 1)
    start = lo
    while start < hi:
        stop = min(start + segment, hi)
        flags = np.ones(stop - start, dtype=bool)
        for p in base:
            p = int(p)
            if p * p >= stop:
                break
            first = max(p * p, -(-start // p) * p)
            flags[first - start::p] = False
        for off in np.flatnonzero(flags):
            yield start + int(off)
        start = stop


def _pollard_brent(n: int, rng: random.Random, max_iter: int) -> int | None:
    """A nontrivial factor of composite ``n``, or None within ``max_iter`` steps."""
    if n % 2 == 0:
        return 2
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
    g = r = q = 1
    steps = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
        steps += r
        if steps > max_iter:
            return None
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def factorize(m: int, trial_bound: int = 10_000, rho_budget: int = 2_000_000) -> tuple[int, list[tuple[int, int]]]:
    """Return ``(sign, [(prime, exponent), ...])`` with primes ascending.

    Trial division up to ``trial_bound``, then Brent's variant of Pollard rho.
    Raises :class:`FactorizationError` if a composite cofactor survives.
    """
    if m == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if m < 0 else 1
    n = abs(m)
    counts: dict[int, int] = {}
    for d in _trial_candidates(trial_bound):
        if d * d > n:
            break
        while n % d == 0:
            counts[d] = counts.get(d, 0) + 1
            n //= d
    stack = [n] if n > 1 else []
    rng = random.Random(0x5EED)
    while stack:
        k = stack.pop()
        if is_prime(k):
            counts[k] = counts.get(k, 0) + 1
            continue
        root = math.isqrt(k)
        if root * root == k:
            stack += [root, root]
            continue
        for _ in range(8):
            f = _pollard_brent(k, rng, rho_budget)
            if f:
                stack += [f, k // f]
                break
        else:
            partial = sorted(counts.items())
            raise FactorizationError(m, partial, k)
    factors = sorted(counts.items())
    assert sign * math.prod(p**e for p, e in factors) == m
    return sign, factors


def _trial_candidates(bound: int) -> Iterator[int]:
    yield 2
    yield from range(3, bound + 1, 2)


def format_factorization(sign: int, factors: list[tuple[int, int]]) -> str:
    """Render as e.g. ``-3 * 11^9 * 31^3``."""
    parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in factors] or ["1"]
    text = " * ".join(parts)
    return "-" + text if sign < 0 else text
