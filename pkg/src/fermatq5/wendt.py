"""Wendt resultants W_n = Res(X^n - 1, (X+1)^n - 1).

Exact values come from a subresultant remainder sequence over Z and are only
feasible for small n. Divisibility ``q | W_n`` for a prime ``q = 1 mod n`` is
decided in F_q instead: it holds exactly when some n-th root of unity α has
``(α+1)^n = 1``.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .modarith import WORD_LIMIT, _modulus, iter_roots_of_unity, pow_mod_array, roots_of_unity_array

DEFAULT_EXACT_BOUND = 64

# below this n the streaming scalar loop beats building numpy arrays
_VECTOR_THRESHOLD = 48


class WendtSizeError(ValueError):
    pass


@dataclass(frozen=True)
class WendtValue:
    n: int
    value: int


# -- integer polynomials, coefficient lists with the leading term first -------

def _strip(f: list[int]) -> list[int]:
    i = 0
    while i < len(f) - 1 and f[i] == 0:
        i += 1
    return f[i:]


def _deg(f: list[int]) -> int:
    return -1 if f == [0] else len(f) - 1


def _content(f: list[int]) -> int:
    return reduce(math.gcd, f, 0)


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of ``lc(b)**(deg a - deg b + 1) * a`` by ``b``."""
    da, db = len(a) - 1, len(b) - 1
    lb = b[0]
    r = list(a)
    for _ in range(da - db + 1):
        if len(r) - 1 < db:
            r = [lb * c for c in r]
            continue
        lead = r[0]
        r = [lb * c for c in r]
        for j in range(len(b)):
            r[j] -= lead * b[j]
        r = r[1:] or [0]
    return _strip(r)


def resultant(f: list[int], g: list[int]) -> int:
    """Resultant of two integer polynomials via the subresultant PRS."""
    a, b = _strip(list(f)), _strip(list(g))
    if a == [0] or b == [0]:
        return 0
    ca, cb = _content(a), _content(b)
    a = [c // ca for c in a]
    b = [c // cb for c in b]
    t = ca ** _deg(b) * cb ** _deg(a)
    s = 1
    if _deg(a) < _deg(b):
        a, b = b, a
        if _deg(a) % 2 and _deg(b) % 2:
            s = -1
    g_, h = 1, 1
    while _deg(b) > 0:
        delta = _deg(a) - _deg(b)
        if _deg(a) % 2 and _deg(b) % 2:
            s = -s
        r = _prem(a, b)
        if r == [0]:
            return 0
        div = g_ * h**delta
        a, b = b, [c // div for c in r]
        g_ = a[0]
        h = g_**delta // h ** (delta - 1) if delta else h
    # b is a nonzero constant here
    da = _deg(a)
    h = b[0] ** da // h ** (da - 1) if da else h
    return s * t * h


def wendt_polys(n: int) -> tuple[list[int], list[int]]:
    f = [1] + [0] * (n - 1) + [-1]
    g = [math.comb(n, k) for k in range(n + 1)]
    g[-1] -= 1
    return f, _strip(g)


_cache: dict[int, int] = {}
_cache_lock = threading.Lock()


def wendt_exact(n: int, bound: int = DEFAULT_EXACT_BOUND) -> WendtValue:
    """Exact ``Res(X^n - 1, (X+1)^n - 1)`` for ``1 <= n <= bound``."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > bound:
        raise WendtSizeError(f"n={n} exceeds the exact-computation bound {bound}")
    with _cache_lock:
        if n in _cache:
            return WendtValue(n, _cache[n])
    value = resultant(*wendt_polys(n))
    with _cache_lock:
        _cache[n] = value
    return WendtValue(n, value)


def divides_wendt(q, n: int, vectorize: bool | None = None) -> bool:
    """True iff the prime ``q`` divides W_n, for ``n | q - 1``.

    ``vectorize`` forces (True) or forbids (False) the numpy lane; by default
    it is used for word-sized q and large n.
    """
    q = _modulus(q)
    if n < 1 or (q - 1) % n:
        raise ValueError(f"n={n} does not divide q-1={q - 1}")
    if n % 6 == 0:
        return True  # W_n = 0
    if vectorize is None:
        vectorize = q < WORD_LIMIT and n >= _VECTOR_THRESHOLD
    if vectorize:
        shifted = (roots_of_unity_array(q, n) + np.uint64(1)) % np.uint64(q)
        return bool((pow_mod_array(shifted, n, q) == 1).any())
    for alpha in iter_roots_of_unity(q, n):
        if pow(alpha + 1, n, q) == 1:
            return True
    return False
