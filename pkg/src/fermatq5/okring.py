"""Arithmetic in Z[φ], the ring of integers of Q(√5), and in Z[φ]/4.

φ = (1 + √5)/2 satisfies φ² = φ + 1. The prime 2 is inert, so the ideal
P₂ = (2) has residue field F_4 and Z[φ]/4 = Z[φ]/P₂² is a local ring with 16
elements. Residues mod 4 are named as ``x + 2y`` with x, y in {0, 1, u, u²},
where u is the image of φ.
"""
from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator


@dataclass(frozen=True)
class GoldenInt:
    """The element ``a + b·φ`` of Z[φ]."""

    a: int
    b: int = 0

    @classmethod
    def coerce(cls, x) -> GoldenInt:
        if isinstance(x, GoldenInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        a, b = x
        return cls(int(a), int(b))

    def __add__(self, other):
        o = GoldenInt.coerce(other)
        return GoldenInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return GoldenInt(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-GoldenInt.coerce(other))

    def __rsub__(self, other):
        return GoldenInt.coerce(other) - self

    def __mul__(self, other):
        o = GoldenInt.coerce(other)
        a, b, c, d = self.a, self.b, o.a, o.b
        return GoldenInt(a * c + b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        result, base = GoldenInt(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self):
        return bool(self.a or self.b)

    def __eq__(self, other):
        try:
            o = GoldenInt.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def conjugate(self) -> GoldenInt:
        # φ ↦ 1 - φ
        return GoldenInt(self.a + self.b, -self.b)

    def divexact(self, k: int) -> GoldenInt:
        if self.a % k or self.b % k:
            raise ArithmeticError(f"{self} is not divisible by {k}")
        return GoldenInt(self.a // k, self.b // k)

    def __str__(self):
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}φ"
        return f"{self.a}{self.b:+d}φ"


PHI = GoldenInt(0, 1)


def norm(x) -> int:
    x = GoldenInt.coerce(x)
    return x.a * x.a + x.a * x.b - x.b * x.b


def _v2(m: int) -> int:
    m = abs(m)
    return (m & -m).bit_length() - 1


def v_p2(x) -> int:
    """Valuation at the inert prime above 2: half the 2-adic valuation of the norm."""
    x = GoldenInt.coerce(x)
    if not x:
        raise ValueError("valuation of zero")
    v = _v2(norm(x))
    assert v % 2 == 0, "2-adic valuation of a norm must be even"
    return v // 2


def split_type(q: int) -> str:
    """How the rational prime q decomposes in Z[φ]."""
    if q == 5:
        return "ramified"
    return "split" if q % 5 in (1, 4) else "inert"


# -- the residue ring Z[φ]/4 -----------------------------------------------

_F4_NAMES = {(0, 0): "0", (1, 0): "1", (0, 1): "u", (1, 1): "u²"}


@dataclass(frozen=True)
class ResidueMod4:
    """Class of ``a + b·φ`` modulo 4."""

    a: int
    b: int = 0

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % 4)
        object.__setattr__(self, "b", self.b % 4)

    @classmethod
    def of(cls, x) -> ResidueMod4:
        if isinstance(x, ResidueMod4):
            return x
        x = GoldenInt.coerce(x)
        return cls(x.a, x.b)

    def __add__(self, other):
        o = ResidueMod4.of(other)
        return ResidueMod4(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return ResidueMod4(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-ResidueMod4.of(other))

    def __mul__(self, other):
        o = ResidueMod4.of(other)
        g = GoldenInt(self.a, self.b) * GoldenInt(o.a, o.b)
        return ResidueMod4(g.a, g.b)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        g = GoldenInt(self.a, self.b) ** e
        return ResidueMod4(g.a, g.b)

    def is_unit(self) -> bool:
        return (self.a % 2, self.b % 2) != (0, 0)

    def digits(self) -> tuple[str, str]:
        """The pair (x, y) of the representative x + 2y, as names in {0, 1, u, u²}."""
        xa, xb = self.a % 2, self.b % 2
        y = GoldenInt(self.a - xa, self.b - xb).divexact(2)
        return _F4_NAMES[(xa, xb)], _F4_NAMES[(y.a % 2, y.b % 2)]

    def __str__(self):
        x, y = self.digits()
        if y == "0":
            return x
        two_y = "2" if y == "1" else f"2{y}"
        return two_y if x == "0" else f"{x}+{two_y}"


def _named(x: str) -> ResidueMod4:
    return {"0": ResidueMod4(0), "1": ResidueMod4(1), "u": ResidueMod4(0, 1), "u²": ResidueMod4(1, 1)}[x]


U = ResidueMod4(0, 1)
F4_REPS = ("0", "1", "u", "u²")


@dataclass(frozen=True)
class Mod4Ring:
    elements: tuple[ResidueMod4, ...]
    units: tuple[ResidueMod4, ...]
    non_units: tuple[ResidueMod4, ...]


def ring_mod4() -> Mod4Ring:
    """The 16 classes x + 2y (x, y in {0, 1, u, u²}), split into units and non-units."""
    elements = tuple(_named(x) + 2 * _named(y) for x in F4_REPS for y in F4_REPS)
    units = tuple(e for e in elements if e.is_unit())
    non_units = tuple(e for e in elements if not e.is_unit())
    return Mod4Ring(elements, units, non_units)


VALID_P_CLASSES = (1, 5, 7, 11)


def pth_power_mod4(x, p_class: int) -> ResidueMod4:
    """x**p mod 4 for any prime p >= 5 with p = p_class mod 12.

    The unit group mod 4 has exponent dividing 12 and non-units square to 0,
    so the residue depends only on p mod 12.
    """
    if p_class not in VALID_P_CLASSES:
        raise ValueError(f"p mod 12 must be one of {VALID_P_CLASSES}, got {p_class}")
    x = ResidueMod4.of(x)
    if not x.is_unit():
        return ResidueMod4(0)
    return x ** p_class


# -- normalizing a hypothetical solution mod 4 ----------------------

#: the four admissible (a^p, b^p) pairs when 2 does not divide abc
ODD_CASES = {
    "(u,1+2u)": (U, 1 + 2 * U),
    "(3,u²)": (ResidueMod4(3), U * U),
    "(1,u)": (ResidueMod4(1), U),
    "(1,u²+2u)": (ResidueMod4(1), U * U + 2 * U),
}


@dataclass
class Lemma1Report:
    p_class: int
    triples: int
    orbits: int
    even_orbits: int
    odd_orbits: int
    failing: list[tuple[ResidueMod4, ResidueMod4, ResidueMod4]] = field(default_factory=list)
    identities: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failing and all(self.identities.values())


def lemma1_identities() -> dict[str, bool]:
    u = U
    return {
        "1+2u = u³": 1 + 2 * u == u**3,
        "u(u²+2) = 1+4u": u * (u * u + 2) == 1 + 4 * u,
        "u has order 6": [u**k == ResidueMod4(1) for k in range(1, 7)] == [False] * 5 + [True],
    }


def lemma1_verify(p_class: int) -> Lemma1Report:
    """Exhaustively check the mod-4 normalization for exponents p = p_class mod 12.

    Every triple (a, b, c) mod 4 with a^p + b^p + c^p = 0, and either all of
    a, b, c units or exactly one of them divisible by 2, is grouped into its
    orbit under permutations and multiplication by the 12 units. Each orbit
    must contain a member with either
      (1) 2 | a and b a square mod 4, or
      (2) (a^p, b^p) one of the pairs in ``ODD_CASES``.
    """
    if p_class not in VALID_P_CLASSES:
        raise ValueError(f"p mod 12 must be one of {VALID_P_CLASSES}, got {p_class}")
    ring = ring_mod4()
    units = ring.units
    squares = {x * x for x in units}
    power = {x: pth_power_mod4(x, p_class) for x in ring.elements}
    odd_targets = set(ODD_CASES.values())

    def good(t):
        a, b, c = t
        if not a.is_unit():
            return b in squares
        return (power[a], power[b]) in odd_targets

    zero = ResidueMod4(0)
    seen: set = set()
    report = Lemma1Report(p_class, 0, 0, 0, 0, identities=lemma1_identities())
    for t in itertools.product(ring.elements, repeat=3):
        n_units = sum(x.is_unit() for x in t)
        if n_units < 2 or power[t[0]] + power[t[1]] + power[t[2]] != zero:
            continue
        report.triples += 1
        if t in seen:
            continue
        orbit = {tuple(e * x for x in perm) for perm in itertools.permutations(t) for e in units}
        seen |= orbit
        report.orbits += 1
        if n_units == 3:
            report.odd_orbits += 1
        else:
            report.even_orbits += 1
        if not any(good(s) for s in orbit):
            report.failing.append(t)
    return report


# -- Frey curve invariants ----------------------------------------------------

@dataclass(frozen=True)
class FreyInvariants:
    c4: GoldenInt
    c6: GoldenInt
    disc: GoldenInt


def frey_invariants(A, B) -> FreyInvariants:
    """c4, c6, Δ of y² = x(x - A)(x + B), with C = -A - B."""
    A, B = GoldenInt.coerce(A), GoldenInt.coerce(B)
    C = -A - B
    if not (A and B and C):
        raise ValueError("A, B and C = -A-B must all be nonzero")
    c4 = 16 * (A * A + A * B + B * B)
    c6 = -32 * (A - B) * (B - C) * (C - A)
    disc = 16 * (A * B * C) ** 2
    if c4**3 - c6 * c6 != 1728 * disc:
        raise ArithmeticError("c4^3 - c6^2 != 1728Δ")
    return FreyInvariants(c4, c6, disc)


# -- valuations at P₂ ---------------------------------------------------------

LEMMA3_CASES = ("even",) + tuple(ODD_CASES)

#: valuation triples (c4, c6, Δ) claimed for each odd case
LEMMA3_EXPECTED = {
    "(u,1+2u)": (6, 5, 4),
    "(3,u²)": (5, 5, 4),
    "(1,u)": (5, 5, 4),
    "(1,u²+2u)": (5, 5, 4),
}


@dataclass
class Lemma3Report:
    case: str
    samples: int
    observed: Counter = field(default_factory=Counter)
    mismatches: list[tuple[GoldenInt, GoldenInt, tuple[int, int, int]]] = field(default_factory=list)
    remark_observed: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _random_lift(rng: random.Random, residue: ResidueMod4, spread: int) -> GoldenInt:
    return GoldenInt(residue.a + 4 * rng.randint(-spread, spread), residue.b + 4 * rng.randint(-spread, spread))


def _random_odd_element(rng: random.Random, spread: int) -> GoldenInt:
    while True:
        x = GoldenInt(rng.randint(-spread, spread), rng.randint(-spread, spread))
        if x and v_p2(x) == 0:
            return x


def sample_case(case: str, rng: random.Random, spread: int = 10**6, v_a: int | None = None) -> tuple[GoldenInt, GoldenInt]:
    """Random exact (A, B) in the given mod-4 case.

    For the even case A = 2^v_a · (odd element), with v_a drawn from
    [2, 12] unless given, and B a unit square class mod 4. A genuine p-th
    power divisible by 2 has valuation >= p >= 5, so valuation 1 is excluded.
    """
    if case == "even":
        ring = ring_mod4()
        squares = sorted({x * x for x in ring.units}, key=lambda r: (r.a, r.b))
        k = v_a if v_a is not None else rng.randint(2, 12)
        A = (1 << k) * _random_odd_element(rng, spread)
        B = _random_lift(rng, rng.choice(squares), spread)
        return A, B
    ra, rb = ODD_CASES[case]
    return _random_lift(rng, ra, spread), _random_lift(rng, rb, spread)


def lemma3_verify(case: str, samples: int = 100, seed: int = 0, v_a: int | None = None) -> Lemma3Report:
    """Compare the P₂-valuations of c4, c6, Δ on random realizations of a case.

    Expected: (4, 6, 4 + 2·v(ABC)) in the even case, the table
    ``LEMMA3_EXPECTED`` in the odd ones. For "(1,u²+2u)" the report also
    tallies v(A²+AB+B²), v(A²+AC+C²), v(B²+BC+C²).
    """
    if case not in LEMMA3_CASES:
        raise ValueError(f"unknown case {case!r}; expected one of {LEMMA3_CASES}")
    rng = random.Random(seed)
    report = Lemma3Report(case, samples)
    for _ in range(samples):
        A, B = sample_case(case, rng, v_a=v_a)
        C = -A - B
        inv = frey_invariants(A, B)
        vals = (v_p2(inv.c4), v_p2(inv.c6), v_p2(inv.disc))
        report.observed[vals] += 1
        if case == "even":
            expected = (4, 6, 4 + 2 * v_p2(A * B * C))
        else:
            expected = LEMMA3_EXPECTED[case]
        if vals != expected:
            report.mismatches.append((A, B, vals))
        if case == "(1,u²+2u)":
            key = tuple(v_p2(x * x + x * y + y * y) for x, y in ((A, B), (A, C), (B, C)))
            report.remark_observed[key] += 1
    return report


def iter_small(bound: int) -> Iterator[GoldenInt]:
    """All nonzero a + bφ with |a|, |b| <= bound."""
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if a or b:
                yield GoldenInt(a, b)
