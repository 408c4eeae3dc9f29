# # A hundred-digit exponent
#
# The witness search is cheap even for huge p: we only need Miller-Rabin on
# q and a walk over the n-th roots of unity mod q.

import time

from fermatq5.criterion import decide, theorem_conditions

p = 10**100 + 267
t = time.perf_counter()
cert = decide(p, n_max=1000)
print(cert, cert.primality_mode, f"{time.perf_counter() - t:.2f}s")
for name, ok in theorem_conditions(p, cert.n).items():
    print(f"  {name}: {ok}")
