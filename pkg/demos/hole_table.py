"""
Holes of the Chow monoid for three linear forms
================================================

Partitions that occur in Sym^d Sym^3 C^3 (so in the saturation of the
monoid of the Chow variety) but not in Sym^3 Sym^d C^3 (so not in the
monoid of its normalization).  Run with ``python demos/hole_table.py``.
"""
from gctholes.chow import chow3_hole_scan, infinite_family_check
from gctholes.partitions import format_partition

# the scan up to degree 9 takes a couple of seconds
records = chow3_hole_scan(9)
for d in range(4, 10):
    row = [
        format_partition(r.partition) + ("^2" if r.ambient == 2 else "")
        for r in records
        if r.degree == d
    ]
    print(f"d={d}: " + "  ".join(row))
print(len(records), "holes")

# one member of the infinite family, with its column-cut reduction
verdict = infinite_family_check(j=1, k=1)
print("\n", verdict.partition, "ambient", verdict.ambient, "normalization", verdict.normalization)
for part, inner, mult in verdict.chain:
    print(f"   {format_partition(part):>10} in Sym^3 Sym^{inner}: {mult}")
