"""
A tour of the field layer
=========================

Elements of GF(p^n) are plain ints: the element sum(c_i alpha^i) gets the
index sum(c_i p^i), where alpha is a root of the canonical modulus.  All
arithmetic happens on indices through the Field object.
"""

from ppforge import make_field, field_of_order

# A prime field is just arithmetic mod p.
F7 = make_field(7)
print("GF(7):", F7)
print("3 + 5 =", F7.add(3, 5))
print("3 * 5 =", F7.mul(3, 5))
print("1 / 3 =", F7.inv(3))
print("primitive element:", F7.xi)

# Extension fields pick the lexicographically smallest irreducible modulus
# unless told otherwise.  Coefficients are listed low degree first.
F16 = make_field(2, 4)
print("\nGF(16) modulus:", F16.modulus)     # x^4 + x + 1
print("GF(16) primitive element:", F16.xi)

# decode/encode translate between indices and coefficient vectors.
x = 11
print(f"index {x} is the vector", F16.decode(x))

# Multiplication really is polynomial multiplication mod the modulus:
a, b = 6, 7
print(f"{F16.decode(a)} * {F16.decode(b)} = {F16.decode(F16.mul(a, b))}")

# Every nonzero element is a power of xi; dlog recovers the exponent.
for k in (0, 1, 5, 14):
    e = F16.pow(F16.xi, k)
    print(f"xi^{k} = {e}, dlog back = {F16.dlog(F16.xi, e)}")

# field_of_order is a shortcut when you only know q.
F27 = field_of_order(27)
print("\nGF(27) =", F27, "with modulus", F27.modulus)

# Small fields run on full multiplication tables, mid-size ones on exp/log
# tables, and anything beyond 2^16 falls back to digit arithmetic with
# baby-step giant-step logarithms.  Same API at every size:
big = make_field(2, 17)
a = 99999
print("\nGF(2^17): a * a^-1 =", big.mul(a, big.inv(a)))
