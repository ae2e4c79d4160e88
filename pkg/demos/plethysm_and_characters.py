"""
Plethysms through symmetric group characters
============================================

Sym^d Sym^n is expanded in power sums and each Schur coefficient is a dot
product with a character.  The same numbers come out of a brute-force
count of monomials, shown side by side.
"""
from gctholes.characters import character, inner_product, mn_character
from gctholes.partitions import enumerate_partitions, format_partition
from gctholes.plethysm import brute_force_mult, h_plethysm_h, schur_expansion

print("chi^(2,1) on the classes of S_3:", {mu: mn_character((2, 1), mu) for mu in enumerate_partitions(3)})
chi = character((2, 1))
print("<chi, chi> =", inner_product(chi, chi))

f = h_plethysm_h(2, 2)
print("\nh_2[h_2] in power sums:", {format_partition(mu): str(c) for mu, c in f.coeffs.items()})

print("\nSym^4 Sym^3, partitions with at most 3 rows:")
for lam, m in sorted(schur_expansion(4, 3, max_rows=3).mults.items(), reverse=True):
    print(f"  {format_partition(lam):>8}  {m}   (brute force: {brute_force_mult(lam, 4, 3)})")
