# # Wendt numbers
#
# W_n is the resultant of X^n - 1 and (X + 1)^n - 1. It vanishes exactly
# when 6 | n, because a primitive sixth root of unity z has z + 1 = -z².

from fermatq5.primes import factorize, format_factorization
from fermatq5.wendt import divides_wendt, wendt_exact

for n in range(1, 17):
    w = wendt_exact(n).value
    print(f"W_{n:<2d} = {format_factorization(*factorize(w)) if w else 0}")

# For large q we never build W_n. A prime q = 1 mod n divides W_n iff some
# n-th root of unity a in F_q has (a + 1)^n = 1 as well.

print(divides_wendt(31, 10), divides_wendt(41, 10))
print(divides_wendt(10**12 + 39, 2), "(n=2, q odd: W_2 = -3)")
