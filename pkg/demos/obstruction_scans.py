"""
Searching for obstructions
==========================

Partitions that occur in the plethysm Sym^d Sym^n but have vanishing
symmetric Kronecker coefficient with the n x d rectangle.  The searches
below come back empty, as do the larger ones they are prefixes of.
"""
import time

from gctholes.kronecker import sym_kron
from gctholes.obstructions import det3_gap_scan, padded_filter, problem1_scan

for n, d_max in [(2, 10), (3, 6), (4, 4)]:
    start = time.perf_counter()
    report = problem1_scan(n, d_max)
    print(f"n={n}, d<={d_max}: {len(report.candidates)} candidates ({time.perf_counter() - start:.1f}s)")

report = det3_gap_scan(6)
print("det3 gap candidates up to degree 6:", len(report.candidates))

# the hook (dn-1, 1) has vanishing sk but is excluded by the plethysm
print("sk((8,1), 3x3) =", sym_kron((8, 1), (3, 3, 3)))
print("padded filter (5,1), n=3, m=2:", padded_filter((5, 1), 3, 2))
