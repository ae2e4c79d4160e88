"""
Saturation and holes of a toy monoid
====================================

N^2 with (0,1) and (1,0) removed: its saturation is all of N^2 and the two
missing points are its only holes.
"""
from gctholes.monoid import FGMonoid, MembershipOracle, holes_in_box, in_cone, in_group, min_stretch

M = FGMonoid.from_vectors([(2, 0), (3, 0), (1, 1), (2, 1), (1, 2), (0, 2), (0, 3)])
print("lattice basis:", M.lattice_basis)
print("(0,1) in group:", in_group(M, (0, 1)), " in cone:", in_cone(M, (0, 1)))

oracle = MembershipOracle.from_generators(M, 6)
print("holes in [0,6]^2:", holes_in_box(M, oracle, 6))
print("least c with c*(0,1) in S:", min_stretch((0, 1), oracle, 6))

# a monoid whose group is a proper sublattice has no holes at the odd points
evens = FGMonoid.from_vectors([(2,)])
print("holes of 2N in [0,9]:", holes_in_box(evens, MembershipOracle.from_generators(evens, 9), 9))
