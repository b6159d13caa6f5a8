"""
Coset structure and piecewise-monomial mappings
===============================================

Fix d | q - 1 and write q - 1 = d*s.  The d-th powers form an index-d
subgroup D0 of the multiplicative group; its cosets D0, xi*D0, ...,
xi^(d-1)*D0 slice GF(q)* into d equal parts.  A mapping here acts as
a_i * x^(r_i) on the i-th coset and sends 0 to 0.
"""

from ppforge import Cyclotomy, CyclotomicMapping, check_permutation, field_of_order

F = field_of_order(13)
cyc = Cyclotomy(F, 3)
print("q - 1 = 12 = d*s with d =", cyc.d, "and s =", cyc.s)
print("omega (a primitive cube root of 1):", cyc.omega)

for i, coset in enumerate(cyc.cosets()):
    print(f"coset {i}:", sorted(coset))

# Which coset an element lies in comes from its discrete log mod d.
print("coset of 11:", cyc.coset_index(11))

# A mapping is one coefficient and one exponent per coset.
m = CyclotomicMapping(cyc, a=(8, 1, 1), r=(1, 1, 1))
print("\nmapping values:", m.values())

# Deciding whether it permutes the field takes no enumeration: the
# exponents must be units mod s, and the d branch images must land on
# distinct cosets.
dec = check_permutation(m)
print("permutation:", bool(dec))

# When the test fails it says which part broke.
bad = CyclotomicMapping(cyc, a=(1, 1, 1), r=(2, 1, 1))
print("\nr = (2, 1, 1):", check_permutation(bad).reason)
clash = CyclotomicMapping(cyc, a=(1, 3, 1), r=(1, 1, 1))
print("a = (1, 3, 1):", check_permutation(clash).reason)

# Every mapping flattens to a reduced polynomial with at most 1 + d^2 terms.
print("\nas a polynomial:", m.to_poly())
print("agrees pointwise:", m.to_poly().values() == m.values())
