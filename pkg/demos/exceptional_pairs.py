# # The eight exceptional exponents
#
# For these p no n < p - 2 works. A larger n still works, as long as q = np + 1
# avoids W_n and neither trace of E above q is ±2 mod p.

from fermatq5.criterion import EXCEPTIONAL_TABLE, exceptional_check
from fermatq5.curve import load_curve

E = load_curve()
for p, n in sorted(EXCEPTIONAL_TABLE.items()):
    ev = exceptional_check(p, n, E)
    print(f"p={p:3d} n={n:3d} q={ev.q:5d} traces={ev.traces} mod p={ev.traces_mod_p} ok={ev.ok}")
