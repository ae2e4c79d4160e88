"""
The module-rank bound and Latin square signs
============================================
"""
from gctholes.chow import alon_tarsi_delta, bound_D

for n in range(2, 8):
    rec = bound_D(n)
    print(f"n={n}: D={rec.D}  n^(n^2-2n)={rec.bound}  D<bound: {rec.holds}  ratio={float(rec.ratio):.4f}")

for n in range(1, 5):
    print(f"even - odd Latin squares of size {n}: {alon_tarsi_delta(n)}")
