import random

import pytest

from ppforge import Poly, interpolate, lagrange_inverse, reduce_exponent

from conftest import get_field


def test_reduce_exponent():
    q = 9
    assert reduce_exponent(0, q) == 0
    assert reduce_exponent(1, q) == 1
    assert reduce_exponent(8, q) == 8
    assert reduce_exponent(9, q) == 1
    assert reduce_exponent(16, q) == 8
    assert reduce_exponent(17, q) == 1
    assert reduce_exponent(0, 2) == 0
    assert reduce_exponent(1, 2) == 1
    assert reduce_exponent(2, 2) == 1


def test_construction_merges_and_drops():
    F = get_field(7)
    f = Poly(F, [(1, 3), (1, 4), (2, 0)])
    assert f.coeff(1) == 0 and f.coeff(2) == 0
    assert not f
    g = Poly(F, {0: 2, 5: F.element(3)})
    assert g.coeff(0) == 2 and g.coeff(5) == 3
    h = Poly(F, [(10, 1)])  # exponent reduces mod x^q - x
    assert h.coeff(4) == 1 and h.degree() == 4
    with pytest.raises(ValueError):
        Poly(F, [(-1, 2)])
    with pytest.raises(ValueError):
        Poly(F, [(1, 9)])


def test_builders():
    F = get_field(5)
    assert Poly.zero(F).degree() == -1
    assert Poly.constant(F, 3).evaluate_index(2) == 3
    assert Poly.x(F).evaluate_index(4) == 4
    m = Poly.monomial(F, 2, 3)
    assert m.evaluate_index(2) == F.mul(2, F.pow(2, 3))


def test_evaluate_conventions():
    F = get_field(8)
    f = Poly(F, [(0, 5), (3, 2)])
    # x = 0 must return the constant term (0^0 never contributes x-terms)
    assert f.evaluate_index(0) == 5
    x = F.element(3)
    assert f.evaluate(x).index == f.evaluate_index(3)
    assert f.evaluate(3) == f.evaluate_index(3)
    assert f(x) == f.evaluate(x)


def test_values_matches_pointwise():
    rng = random.Random(3)
    for q in (2, 3, 4, 5, 9, 16, 27):
        F = get_field(q)
        terms = [(rng.randrange(q), rng.randrange(q)) for _ in range(5)]
        f = Poly(F, terms)
        vals = f.values()
        assert len(vals) == q
        for x in range(q):
            assert vals[x] == f.evaluate_index(x)


def test_is_permutation():
    F = get_field(9)
    assert Poly.x(F).is_permutation()
    assert Poly(F, [(3, 1)]).is_permutation()  # gcd(3, 8) = 1
    assert not Poly(F, [(2, 1)]).is_permutation()
    assert not Poly.constant(F, 4).is_permutation()


def test_algebra_is_pointwise():
    rng = random.Random(4)
    F = get_field(13)
    for _ in range(10):
        f = Poly(F, [(rng.randrange(13), rng.randrange(13)) for _ in range(4)])
        g = Poly(F, [(rng.randrange(13), rng.randrange(13)) for _ in range(4)])
        s, d_, p = f + g, f - g, f * g
        c = f.compose(g)
        sq = f**2
        for x in range(13):
            fx, gx = f.evaluate_index(x), g.evaluate_index(x)
            assert s.evaluate_index(x) == F.add(fx, gx)
            assert d_.evaluate_index(x) == F.sub(fx, gx)
            assert p.evaluate_index(x) == F.mul(fx, gx)
            assert c.evaluate_index(x) == f.evaluate_index(gx)
            assert sq.evaluate_index(x) == F.mul(fx, fx)
        assert (3 * f).evaluate_index(2) == F.mul(3, f.evaluate_index(2))
        assert (-f + f).degree() == -1


def test_compose_reduces():
    F = get_field(7)
    f = Poly(F, [(4, 1)])
    g = Poly(F, [(4, 1)])
    c = f.compose(g)  # x^16 reduces to x^4
    assert c.degree() < 7
    for x in range(7):
        assert c.evaluate_index(x) == F.pow(x, 16)


def test_str_ordering():
    F = get_field(7)
    f = Poly(F, [(5, 1), (3, 2), (1, 5)])
    assert str(f) == "x^5 + 2x^3 + 5x"
    assert str(Poly.zero(F)) == "0"
    assert str(Poly.constant(F, 4)) == "4"


def test_interpolate_roundtrip():
    rng = random.Random(5)
    for q in (2, 3, 4, 5, 7, 9, 13, 16):
        F = get_field(q)
        for _ in range(4):
            table = [rng.randrange(q) for _ in range(q)]
            f = interpolate(F, table)
            assert f.degree() < q
            assert f.values() == table


def test_interpolate_fixes_polys():
    # interpolation of a reduced polynomial's value table returns it unchanged
    rng = random.Random(6)
    F = get_field(11)
    for _ in range(5):
        f = Poly(F, [(rng.randrange(11), rng.randrange(11)) for _ in range(4)])
        assert interpolate(F, f.values()) == f


def test_lagrange_inverse():
    rng = random.Random(7)
    for q in (5, 8, 9, 13):
        F = get_field(q)
        table = list(range(q))
        rng.shuffle(table)
        f = interpolate(F, table)
        g = lagrange_inverse(f)
        x = Poly.x(F)
        assert g.compose(f) == x
        assert f.compose(g) == x
    with pytest.raises(ValueError):
        lagrange_inverse(Poly.constant(get_field(5), 1))


def test_dict_roundtrip():
    F = get_field(9)
    f = Poly(F, [(1, 3), (5, 7)])
    d = f.to_dict()
    assert d["terms"] == [[1, 3], [5, 7]]
    assert Poly.from_dict(d) == f
    with pytest.raises(ValueError):
        Poly.from_dict({"field": F.to_dict(), "terms": [[5, 7], [1, 3]]})
    with pytest.raises(ValueError):
        Poly.from_dict({"field": F.to_dict(), "terms": [[9, 1]]})


def test_hash_eq():
    F = get_field(7)
    a = Poly(F, [(2, 3)])
    b = Poly(F, {2: 3})
    assert a == b and hash(a) == hash(b)
    assert a != Poly(F, [(2, 4)])
    assert a != Poly(get_field(5), [(2, 3)])
