# # Traces of the curve of conductor P₂³ (P₂ = 2Z[φ])
#
# The bundled curve is y² = x(x + 1)(x + φ²). Its discriminant is 16φ⁶, so
# it has good reduction away from 2. We count points at each prime above a
# split q and print a_q = q + 1 - #E.

from fermatq5.curve import good_split_primes, load_curve, trace_pair

E = load_curve()
print(E.source, E.coefficients)

for q in good_split_primes(E, 200):
    print(q, trace_pair(E, q).traces)

# a_q is always q + 1 mod 4 (full 2-torsion), and the two primes above q
# give the same trace because the curve is isogenous to its conjugate.
