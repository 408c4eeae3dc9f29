"""Certificates for Fermat's Last Theorem over Q(√5), exponent by exponent."""

from .criterion import EXCEPTIONAL_TABLE, WitnessCertificate, corollary2_check, decide, exceptional_check, theorem_witness
from .curve import load_curve, trace_pair
from .okring import GoldenInt, frey_invariants, norm, v_p2
from .primes import factorize, is_prime, primes_in_range
from .wendt import divides_wendt, wendt_exact

__version__ = "0.1.0"
