"""
Closed-form compositional inverses
==================================

For a permuting cyclotomic mapping the inverse is again a cyclotomic
shape, computable without interpolation: each branch exponent r gets a
Bezout pair (r_tilde, t) with r*r_tilde + s*t = 1, and the inverse is a
double sum with at most d^2 terms.  Every inversion below returns a
certificate carrying the inverse, the Bezout data, and how it was
verified.
"""

from ppforge import (
    CyclotomicMapping,
    Cyclotomy,
    Poly,
    field_of_order,
    invert_char2_family,
    invert_mapping,
    invert_two_branches,
    invert_two_cosets,
    invert_xr_hxs,
    lagrange_inverse,
    make_field,
)

F = field_of_order(7)
m = CyclotomicMapping(Cyclotomy(F, 2), a=(4, 2), r=(1, 1))
f = m.to_poly()
print("f =", f)

cert = invert_mapping(m)
print("f^-1 =", cert.inverse)
print("branches:", cert.branches)
print("verified:", cert.verified)
print("matches the interpolation oracle:", cert.inverse == lagrange_inverse(f))

# d = 2 over odd q has a two-term closed form; same answer.
print("two-coset path agrees:", invert_two_cosets(m).inverse == cert.inverse)

# One branch on D0, another everywhere else (d >= 3).  The decision and
# the inverse come together.
F13 = field_of_order(13)
dec, cert2 = invert_two_branches(F13, 3, a0=8, a1=1, r0=1, r1=1)
print("\ntwo-branch over GF(13): pp =", bool(dec), " inverse =", cert2.inverse)

# A family over GF(4^n) that always permutes: here n = 2, so q = 16.
f3, cert3 = invert_char2_family(2, i=1, j=2)
print("\nchar-2 family member:", f3)
print("inverse:", cert3.inverse)

# x^r * h(x^s) for h nonvanishing on the d-th roots of unity.
F25 = field_of_order(25)
h = Poly(F25, [(0, 1), (1, 6)])
cert4 = invert_xr_hxs(F25, 4, 5, h)
print("\nx^5 h(x^6) over GF(25) inverted, verified:", cert4.verified)
print("term count:", len(cert4.inverse), "(bound is d^2 = 16)")
