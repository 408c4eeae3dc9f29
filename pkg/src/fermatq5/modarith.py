"""Modular arithmetic over odd prime moduli.

Residues are plain Python ints in ``[0, q)``. Two lanes exist:

* the scalar lane, built on the builtin three-argument ``pow``; exact for any
  modulus size (the 10**100 demonstration runs here);
* a vectorized numpy lane for word-sized moduli (``q < 2**32``) that works on
  whole arrays of residues at once, used when many roots must be tested.

Both lanes return identical values; the test suite checks this on random
inputs.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

#: moduli below this bound may use the uint64 numpy lane (products fit in 64 bits)
WORD_LIMIT = 1 << 32


@dataclass(frozen=True)
class PrimeModulus:
    """An odd prime modulus ``q``; primality is checked on construction."""

    q: int

    def __post_init__(self):
        from .primes import is_prime

        if self.q < 3 or not is_prime(self.q):
            raise ValueError(f"modulus must be an odd prime, got {self.q}")

    @property
    def is_word(self) -> bool:
        return self.q < WORD_LIMIT

    def __int__(self) -> int:
        return self.q


def _modulus(q) -> int:
    return q.q if isinstance(q, PrimeModulus) else int(q)


def pow_mod(base: int, exp: int, q) -> int:
    q = _modulus(q)
    if exp < 0:
        raise ValueError("negative exponent")
    return pow(base % q, exp, q)


def pow_mod_array(bases, exp: int, q) -> np.ndarray:
    """Elementwise ``bases**exp mod q`` by square-and-multiply on uint64 arrays."""
    q = _modulus(q)
    if q >= WORD_LIMIT:
        raise ValueError(f"modulus {q} too large for the word lane")
    if exp < 0:
        raise ValueError("negative exponent")
    b = np.asarray(bases, dtype=np.uint64) % np.uint64(q)
    mod = np.uint64(q)
    result = np.ones_like(b)
    while exp:
        if exp & 1:
            result = (result * b) % mod
        exp >>= 1
        if exp:
            b = (b * b) % mod
    return result


def legendre(a: int, q) -> int:
    """Legendre symbol (a/q) as -1, 0 or 1."""
    q = _modulus(q)
    a %= q
    if a == 0:
        return 0
    return 1 if pow(a, (q - 1) // 2, q) == 1 else -1


def sqrt_mod(a: int, q) -> tuple[int, int] | None:
    """Both square roots of ``a`` mod the odd prime ``q`` (Tonelli-Shanks).

    Returns ``(r, q - r)`` with ``r <= q - r``, or ``None`` for a non-residue.
    For ``a = 0`` the pair is ``(0, 0)``.
    """
    q = _modulus(q)
    a %= q
    if a == 0:
        return (0, 0)
    if pow(a, (q - 1) // 2, q) != 1:
        return None
    if q % 4 == 3:
        r = pow(a, (q + 1) // 4, q)
    else:
        s, odd = 0, q - 1
        while odd % 2 == 0:
            odd //= 2
            s += 1
        z = 2
        while pow(z, (q - 1) // 2, q) != q - 1:
            z += 1
        m, c, t, r = s, pow(z, odd, q), pow(a, odd, q), pow(a, (odd + 1) // 2, q)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % q
                i += 1
            b = pow(c, 1 << (m - i - 1), q)
            m, c = i, b * b % q
            t, r = t * c % q, r * b % q
    r = min(r, q - r)
    return (r, q - r)


def _check_factors(order: int, primes: Sequence[int]) -> None:
    rest = order
    for ell in primes:
        if ell < 2 or rest % ell:
            raise ValueError(f"{ell} is not a factor of {order}")
        while rest % ell == 0:
            rest //= ell
    if rest != 1:
        raise ValueError(f"factorization of {order} is incomplete (cofactor {rest})")


def primitive_root(q, factors: Sequence[int] | None = None) -> int:
    """Smallest generator of (Z/q)^*, found by trying 2, 3, 4, ... in order.

    ``factors`` lists the distinct primes dividing ``q - 1``. If omitted they
    are computed with :func:`fermatq5.primes.factorize`, which is only
    practical when ``q - 1`` is not of cryptographic size.
    """
    q = _modulus(q)
    if q == 3:
        return 2
    if factors is None:
        from .primes import factorize

        factors = [ell for ell, _ in factorize(q - 1)[1]]
    factors = sorted(set(factors))
    _check_factors(q - 1, factors)
    for g in range(2, q):
        if all(pow(g, (q - 1) // ell, q) != 1 for ell in factors):
            return g
    raise ValueError(f"no primitive root found mod {q}; is it prime?")


def _distinct_prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def root_of_unity(q, n: int) -> int:
    """A primitive ``n``-th root of unity mod ``q``.

    Tries ``c**((q-1)/n)`` for ``c = 2, 3, ...`` until the result has order
    exactly ``n``. For a primitive root ``c`` this is the usual generator of
    the order-``n`` subgroup; only the factorization of ``n`` is needed, so it
    works for moduli whose ``q - 1`` cannot be factored.
    """
    q = _modulus(q)
    if n < 1 or (q - 1) % n:
        raise ValueError(f"n={n} does not divide q-1={q - 1}")
    ells = _distinct_prime_factors(n)
    e = (q - 1) // n
    for c in range(2, q):
        z = pow(c, e, q)
        if all(pow(z, n // ell, q) != 1 for ell in ells):
            return z
    return 1  # n == 1, q == 3 fallthrough


def iter_roots_of_unity(q, n: int) -> Iterator[int]:
    """Stream the ``n`` residues α with α**n = 1 mod q, as powers of a generator."""
    q = _modulus(q)
    z = root_of_unity(q, n)
    a = 1
    for _ in range(n):
        yield a
        a = a * z % q


def nth_roots_of_unity(q, n: int) -> set[int]:
    return set(iter_roots_of_unity(q, n))


def roots_of_unity_array(q, n: int) -> np.ndarray:
    """All ``n``-th roots of unity as a uint64 array (word lane only)."""
    q = _modulus(q)
    if q >= WORD_LIMIT:
        raise ValueError(f"modulus {q} too large for the word lane")
    z = root_of_unity(q, n)
    # powers z**k by doubling: out[k:2k] = out[:k] * z**k
    out = np.empty(n, dtype=np.uint64)
    out[0] = 1
    filled, zk, mod = 1, z, np.uint64(q)
    while filled < n:
        take = min(filled, n - filled)
        out[filled:filled + take] = (out[:take] * np.uint64(zk)) % mod
        filled += take
        zk = zk * zk % q
    return out
