"""
Sparse polynomials mod x^q - x
==============================

As functions on GF(q), polynomials only matter mod x^q - x.  Poly keeps a
term dict, reduces exponents on construction (never collapsing a nonzero
exponent to 0, since x^q = x only holds pointwise for x != 0), and
compares canonically.
"""

from ppforge import Poly, field_of_order, interpolate, lagrange_inverse

F = field_of_order(13)

# x^25 has the same values as x^13, which has the same values as x.
f = Poly(F, [(25, 1)])
print("x^25 reduces to:", f)

# Arithmetic stays reduced.  Note x * x^12 becomes x^13 -> x^1.
g = Poly(F, [(12, 1)]) * Poly.x(F)
print("x^12 * x =", g)

# Composition also reduces.
h = Poly(F, [(3, 2), (1, 1)])
print("h =", h)
print("h(h(x)) =", h.compose(h))

# A value table of length q pins down a unique polynomial of degree < q.
table = [F.mul(5, F.pow(x, 11)) for x in range(13)]
p = interpolate(F, table)
print("\ninterpolated 5x^11:", p)
print("round-trips:", p.values() == table)

# For any permutation polynomial, interpolating the flipped table gives
# the compositional inverse.  This is the slow-but-sure oracle the closed
# forms are tested against.
perm = Poly(F, [(7, 2), (1, 1)])
print("\nperm =", perm, "is a permutation:", perm.is_permutation())
inv = lagrange_inverse(perm)
print("inverse =", inv)
print("inv(perm(x)) == x:", inv.compose(perm) == Poly.x(F))
