import random

import pytest

from ppforge import Cyclotomy, CyclotomicMapping, Poly, fit_mapping, make_field

from conftest import get_field


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def test_construction():
    F = get_field(13)
    cyc = Cyclotomy(F, 3)
    assert cyc.s == 4
    assert F.order(cyc.omega) == 3
    with pytest.raises(ValueError):
        Cyclotomy(F, 5)
    with pytest.raises(ValueError):
        Cyclotomy(F, 0)


def test_coset_index_definition():
    # x = xi^(jd + i) lies in coset i, for every divisor d of q - 1
    for q in (7, 9, 16, 25):
        F = get_field(q)
        for d in divisors(q - 1):
            cyc = Cyclotomy(F, d)
            for k in range(q - 1):
                x = F.pow(F.xi, k)
                assert cyc.coset_index(x) == k % d
            with pytest.raises(ValueError):
                cyc.coset_index(0)


def test_coset_index_generic_tier():
    # beyond the log-table cap the index comes from a subgroup dlog
    F = make_field(65537)
    for d in (2, 4, 16):
        cyc = Cyclotomy(F, d)
        for k in (0, 1, 5, 12345, 65535):
            assert cyc.coset_index(F.pow(F.xi, k)) == k % d


def test_cosets_partition():
    F = get_field(25)
    cyc = Cyclotomy(F, 4)
    parts = cyc.cosets()
    assert len(parts) == 4
    assert all(len(c) == 6 for c in parts)
    seen = set().union(*parts)
    assert seen == set(range(1, 25))
    for i, part in enumerate(parts):
        assert all(cyc.coset_index(x) == i for x in part)


def test_indicator_values():
    for q, d in ((7, 3), (9, 4), (16, 5), (13, 2)):
        F = get_field(q)
        cyc = Cyclotomy(F, d)
        c = F.pow(F.xi, d + 2 % d)  # some nonzero reference point
        ind = cyc.indicator(c)
        target = cyc.coset_index(c)
        assert ind.evaluate_index(0) == 0
        for x in range(1, q):
            assert ind.evaluate_index(x) == (1 if cyc.coset_index(x) == target else 0)


def test_interpolate_on_roots():
    rng = random.Random(11)
    for q, d in ((7, 6), (13, 4), (16, 3), (25, 8)):
        F = get_field(q)
        cyc = Cyclotomy(F, d)
        vals = [rng.randrange(q) for _ in range(d)]
        h = cyc.interpolate_on_roots(vals)
        assert h.degree() < d
        for i in range(d):
            assert h.evaluate_index(F.pow(cyc.omega, i)) == vals[i]
    with pytest.raises(ValueError):
        cyc.interpolate_on_roots([1, 2])


def test_mapping_validation():
    F = get_field(7)
    cyc = Cyclotomy(F, 2)
    with pytest.raises(ValueError):
        CyclotomicMapping(cyc, (1,), (1, 1))
    with pytest.raises(ValueError):
        CyclotomicMapping(cyc, (1, 0), (1, 1))
    with pytest.raises(ValueError):
        CyclotomicMapping(cyc, (1, 1), (0, 1))


def test_mapping_semantics():
    # the mapping sends 0 to 0 and x in coset i to a_i * x^(r_i)
    rng = random.Random(12)
    for q, d in ((7, 2), (9, 8), (13, 3), (16, 15), (27, 2)):
        F = get_field(q)
        cyc = Cyclotomy(F, d)
        a = tuple(rng.randrange(1, q) for _ in range(d))
        r = tuple(rng.randrange(1, 7) for _ in range(d))
        m = CyclotomicMapping(cyc, a, r)
        assert m.evaluate(0) == 0
        vals = m.values()
        for x in range(1, q):
            i = cyc.coset_index(x)
            want = F.mul(a[i], F.pow(x, r[i]))
            assert m.evaluate(x) == want
            assert vals[x] == want


def test_to_poly_agrees_everywhere():
    rng = random.Random(13)
    for q, d in ((5, 4), (8, 7), (9, 2), (11, 5), (25, 3)):
        F = get_field(q)
        cyc = Cyclotomy(F, d)
        for _ in range(6):
            a = tuple(rng.randrange(1, q) for _ in range(d))
            r = tuple(rng.randrange(1, 9) for _ in range(d))
            m = CyclotomicMapping(cyc, a, r)
            f = m.to_poly()
            assert f.values() == m.values()


def test_mapping_dict_roundtrip():
    F = get_field(9)
    m = CyclotomicMapping(Cyclotomy(F, 4), (1, 2, 3, 4), (1, 1, 2, 3))
    d = m.to_dict()
    assert d["d"] == 4 and d["a"] == [1, 2, 3, 4] and d["r"] == [1, 1, 2, 3]
    assert CyclotomicMapping.from_dict(d) == m


def test_fit_mapping_roundtrip():
    rng = random.Random(14)
    for q, d in ((7, 3), (13, 4), (16, 5), (25, 6)):
        F = get_field(q)
        cyc = Cyclotomy(F, d)
        a = tuple(rng.randrange(1, q) for _ in range(d))
        r = tuple(rng.randrange(1, 6) for _ in range(d))
        m = CyclotomicMapping(cyc, a, r)
        got = fit_mapping(m.to_poly(), d)
        assert got is not None
        assert got.values() == m.values()


def test_fit_mapping_rejects():
    F = get_field(7)
    # x^2 + 1 is not multiplicative on any coset structure with d = 1
    f = Poly(F, [(2, 1), (0, 1)])
    assert fit_mapping(f, 1) is None
    with pytest.raises(ValueError):
        fit_mapping(Poly.x(F), 7)  # 7 does not divide q - 1
