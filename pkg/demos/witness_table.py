# # Witnesses for small exponents
#
# For a prime p we look for an even n with q = n*p + 1 prime, q = ±1 mod 5,
# n = 2 mod 4, n < p - 2, and q not dividing the Wendt number W_n.
# The smallest such n is the witness.

from fermatq5 import criterion, load_curve
from fermatq5.primes import primes_in_range

for p in primes_in_range(5, 100):
    n = criterion.theorem_witness(p)
    if n is None:
        print(f"p={p:3d}  no witness")
    else:
        print(f"p={p:3d}  n={n:3d}  q={n * p + 1}")

# Primes without a witness are still covered: 7 by n = 10 (71 is prime and
# never divides W_10), the others by a fixed pair plus a trace check.

E = load_curve()
for p in (7, 11, 23, 83):
    print(criterion.decide(p, curve=E))
