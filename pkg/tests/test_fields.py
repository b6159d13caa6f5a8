import random

import pytest

from ppforge import Field, FieldElement, field_of_order, make_field, min_irreducible
from ppforge.fields import factorize, is_prime

from conftest import get_field


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(50):
        assert is_prime(n) == (n in primes)


def test_is_prime_large():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)
    assert is_prime(1000000007)


def test_factorize():
    assert factorize(1) == {}
    assert factorize(12) == {2: 2, 3: 1}
    assert factorize(2**16) == {2: 16}
    assert factorize(131071) == {131071: 1}
    n = 2 * 3 * 3 * 1000003
    assert factorize(n) == {2: 1, 3: 2, 1000003: 1}


def test_min_irreducible_known():
    assert min_irreducible(2, 2) == [1, 1, 1]
    assert min_irreducible(2, 3) == [1, 1, 0, 1]
    assert min_irreducible(2, 4) == [1, 1, 0, 0, 1]
    assert min_irreducible(3, 2) == [1, 0, 1]
    assert min_irreducible(3, 3) == [1, 2, 0, 1]
    assert min_irreducible(5, 2) == [2, 0, 1]
    assert min_irreducible(7, 2) == [1, 0, 1]


def test_canonical_xi():
    assert get_field(2).xi == 1
    assert get_field(4).xi == 2
    assert get_field(7).xi == 3
    assert get_field(9).xi == 4
    assert get_field(13).xi == 2


def test_bad_construction():
    with pytest.raises(ValueError):
        Field(4)
    with pytest.raises(ValueError):
        Field(3, 0)
    with pytest.raises(ValueError):
        Field(2, 2, [1, 0, 1])  # x^2 + 1 = (x + 1)^2 over GF(2)
    with pytest.raises(ValueError):
        Field(3, 2, [1, 0, 2])  # not monic
    with pytest.raises(ValueError):
        Field(7, 1, [0, 1], xi=2)  # 2 has order 3 in GF(7)*
    with pytest.raises(ValueError):
        field_of_order(12)
    with pytest.raises(ValueError):
        field_of_order(1)


def test_field_laws():
    rng = random.Random(1)
    for q in (2, 3, 4, 8, 9, 25, 27):
        F = get_field(q)
        elems = [rng.randrange(q) for _ in range(30)]
        for a in elems:
            assert F.add(a, 0) == a
            assert F.mul(a, 1) == a
            assert F.add(a, F.neg(a)) == 0
            if a:
                assert F.mul(a, F.inv(a)) == 1
        for a, b in zip(elems, elems[1:]):
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            c = elems[0]
            assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
            assert F.sub(a, b) == F.add(a, F.neg(b))
            if b:
                assert F.div(a, b) == F.mul(a, F.inv(b))


def test_generic_tier_arithmetic():
    # 2^17 exceeds the log-table cap, so this exercises carryless products
    # and baby-step giant-step logarithms.
    F = make_field(2, 17)
    rng = random.Random(2)
    for _ in range(20):
        a = rng.randrange(1, F.q)
        b = rng.randrange(1, F.q)
        assert F.mul(a, F.inv(a)) == 1
        assert F.div(F.mul(a, b), b) == a
        k = rng.randrange(F.q - 1)
        x = F.pow(F.xi, k)
        assert F.dlog(F.xi, x) == k


def test_generic_tier_prime():
    F = make_field(65537)
    assert F.q == 65537
    a = 12345
    assert F.mul(a, F.inv(a)) == 1
    k = 54321
    assert F.dlog(F.xi, F.pow(F.xi, k)) == k


def test_pow_edges():
    F = get_field(9)
    assert F.pow(0, 0) == 1
    assert F.pow(0, 5) == 0
    with pytest.raises(ZeroDivisionError):
        F.pow(0, -1)
    for a in range(1, 9):
        assert F.pow(a, 8) == 1
        assert F.pow(a, -1) == F.inv(a)
        assert F.pow(a, 17) == F.pow(a, 1)


def test_order_and_dlog():
    F = get_field(16)
    for k in range(15):
        x = F.pow(F.xi, k)
        assert F.dlog(F.xi, x) == k
    assert F.order(1) == 1
    assert F.order(F.xi) == 15
    # elements of order 3 and 5 exist in GF(16)*
    assert F.order(F.pow(F.xi, 5)) == 3
    assert F.order(F.pow(F.xi, 3)) == 5
    with pytest.raises(ValueError):
        F.dlog(F.pow(F.xi, 3), F.xi)  # xi is not a power of an order-5 element


def test_encode_decode_roundtrip():
    for q in (4, 9, 27):
        F = get_field(q)
        for x in range(q):
            coeffs = F.decode(x)
            assert len(coeffs) == F.n
            assert all(0 <= c < F.p for c in coeffs)
            assert F.encode(coeffs) == x


def test_scalar_embedding():
    F = get_field(25)
    for k in range(12):
        assert F.scalar(k) == k % 5
    # prime subfield is closed under the field operations
    assert F.add(F.scalar(3), F.scalar(4)) == F.scalar(7)
    assert F.mul(F.scalar(2), F.scalar(3)) == F.scalar(6)


def test_element_wrapper():
    F = get_field(7)
    a = F.element(3)
    b = F.element(5)
    assert (a + b).index == F.add(3, 5)
    assert (a * b).index == F.mul(3, 5)
    assert (a - b).index == F.sub(3, 5)
    assert (a / b).index == F.div(3, 5)
    assert (a**4).index == F.pow(3, 4)
    assert (-a).index == F.neg(3)
    assert a + 1 == F.element(4)
    assert 1 + a == F.element(4)
    assert a == 3 and hash(a) == hash(3)
    assert bool(F.zero()) is False and bool(F.one()) is True
    with pytest.raises(ValueError):
        a + get_field(5).element(2)
    with pytest.raises(ValueError):
        a + 9


def test_elements_iteration():
    F = get_field(8)
    assert list(F.elements()) == list(range(8))
    assert F.index_of(F.element(5)) == 5
    assert F.index_of(6) == 6


def test_dict_roundtrip():
    for q in (5, 16, 27):
        F = get_field(q)
        G = Field.from_dict(F.to_dict())
        assert F == G and hash(F) == hash(G)
    H = Field.from_dict({"p": 7})
    assert H.q == 7 and H.xi == 3


def test_repr_mentions_order():
    F = get_field(9)
    assert repr(F) == "GF(3^2)"
    assert repr(get_field(7)) == "GF(7)"
    assert repr(F.element(4)) == "GF(9):4"
