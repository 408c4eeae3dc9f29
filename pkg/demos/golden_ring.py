# # Arithmetic in Z[φ] and modulo 4
#
# φ = (1 + √5)/2. Elements are a + bφ with integer a, b, and the norm is
# a² + ab - b². The prime 2 stays prime, so Z[φ]/4 has 16 elements.

from fermatq5.okring import PHI, GoldenInt, frey_invariants, lemma1_verify, norm, ring_mod4, v_p2

x = GoldenInt(3, 2)
print(x, x * x, x.conjugate(), norm(x))
print("φ² = φ + 1:", PHI * PHI == PHI + 1)

R = ring_mod4()
print(len(R.elements), "residues,", len(R.units), "units")

# Every solution of A^p + B^p + C^p = 0 reduces mod 4 to one of a few
# normalized shapes; this is checked by brute force over all residue triples.

for pc in (1, 5, 7, 11):
    rep = lemma1_verify(pc)
    print(f"p = {pc} mod 12: {rep.orbits} orbits, failing {len(rep.failing)}")

# Frey curve invariants for a sample triple and their valuations at 2.

A, B = GoldenInt(4, 0), GoldenInt(1, 2)
inv = frey_invariants(A, B)
print([v_p2(t) for t in (inv.c4, inv.c6, inv.disc)])
