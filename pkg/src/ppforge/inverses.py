"""Permutation criteria and closed-form compositional inverses.

A cyclotomic mapping f (see cyclotomic.CyclotomicMapping) permutes GF(q)
exactly when gcd(r_0 * ... * r_{d-1}, s) = 1 and the branch powers

    v_i = a_i^s * omega^(i * r_i)

are pairwise distinct: v_i pins down which coset the image of Di lands in,
so distinctness makes the piece images disjoint, and the gcd condition
makes each piece injective.  When f permutes, its inverse is again a sum
of at most d^2 monomials,

    f^(-1)(x) = (1/d) * sum_{i,j} omega^(i*(t_i - j*r_i)) * (x/a_i)^(rt_i + j*s),

where rt_i, t_i is the Bezout pair with r_i*rt_i + s*t_i = 1 and
0 <= rt_i < max(s, 1).  Everything else in this module is a specialization
of that formula to families with more structure (two cosets, two distinct
branches, Frobenius exponents in characteristic 2, the shape x^r h(x^s)),
plus a catalog search for mappings that are their own inverse.

Inverse constructions return an InverseCertificate carrying the inverse
polynomial, the per-branch Bezout data, and a verification verdict:
"exhaustive" (checked at every point), "sampled", or "none".
"""

from __future__ import annotations

import csv
import json
import math
import random
from typing import NamedTuple

from .config import DEFAULT_SAMPLES, DEFAULT_SEED, resolve_cap
from .cyclotomic import Cyclotomy, CyclotomicMapping
from .fields import Field, make_field
from .polys import Poly


class NotAPermutationError(ValueError):
    """The map in question provably fails to permute its field."""


class PermutationDecision:
    """Outcome of a permutation criterion; truthy exactly when it permutes.

    reason is None on success and a short explanation on failure.  powers
    holds the branch powers v_i when they were computed.
    """

    __slots__ = ("ok", "reason", "powers")

    def __init__(self, ok: bool, reason: str | None = None, powers=None):
        self.ok = ok
        self.reason = reason
        self.powers = powers

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "PermutationDecision(ok)"
        return f"PermutationDecision(not a permutation: {self.reason})"


class Branch(NamedTuple):
    """Bezout data for one branch exponent: r*r_tilde + s*t == 1."""

    r_tilde: int
    t: int


class VerifyResult:
    """How an inverse was checked and whether it held up."""

    __slots__ = ("mode", "ok", "counterexample")

    def __init__(self, mode: str, ok: bool, counterexample=None):
        self.mode = mode  # "exhaustive" or "sampled"
        self.ok = ok
        self.counterexample = counterexample

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return f"VerifyResult({self.mode}, ok)"
        return f"VerifyResult({self.mode}, failed at {self.counterexample})"


class InverseCertificate:
    """A claimed compositional inverse plus the data that produced it."""

    __slots__ = ("inverse", "branches", "u", "verified")

    def __init__(self, inverse: Poly, branches, u=None, verified: str = "none"):
        self.inverse = inverse
        self.branches = tuple(branches)
        self.u = u
        self.verified = verified

    def to_dict(self) -> dict:
        return {
            "inverse": self.inverse.to_dict(),
            "branches": [{"r_tilde": b.r_tilde, "t": b.t} for b in self.branches],
            "u": self.u,
            "verified": self.verified,
        }

    def __repr__(self):
        return f"InverseCertificate({self.inverse!s}, verified={self.verified})"


def _term_exp(raw: int, n1: int) -> int:
    # Inverse formulas index terms by rt + j*s with j running over one full
    # period of omega.  When s == 1 the convention rt = 0 makes the j = 0
    # term read x^0, but that slot really is the j = d term x^(q-1) (the
    # coefficient is unchanged: omega^(i*d*r) = 1).  Exponent 0 never
    # legitimately occurs in an inverse, so map it back.
    return raw if raw else n1


def exponent_bezout(r: int, s: int) -> Branch:
    """The canonical Branch for exponent r: r*rt + s*t == 1, 0 <= rt < s.

    For s > 1 this forces rt in [1, s); for s == 1 the convention is
    rt = 0, t = 1, which the uniform computation below produces.
    """
    if r < 1 or s < 1:
        raise ValueError("exponents must be positive")
    if math.gcd(r, s) != 1:
        raise ValueError(f"gcd({r}, {s}) != 1, no Bezout inverse")
    rt = pow(r, -1, s)
    t = (1 - r * rt) // s
    assert r * rt + s * t == 1
    return Branch(rt, t)


def verify_inverse(f: Poly, g: Poly, cap=None, seed=DEFAULT_SEED,
                   samples=DEFAULT_SAMPLES) -> VerifyResult:
    """Check that g inverts f in both directions.

    Exhaustive over all of GF(q) when q fits under the cap, else sampled
    at `samples` seeded random points.  The counterexample, if any, is the
    element index where composition failed.
    """
    if f.field != g.field:
        raise ValueError("cannot verify across different fields")
    q = f.field.q
    if q <= resolve_cap(cap):
        fv = f.values(cap)
        gv = g.values(cap)
        for c in range(q):
            if gv[fv[c]] != c or fv[gv[c]] != c:
                return VerifyResult("exhaustive", False, c)
        return VerifyResult("exhaustive", True)
    rng = random.Random(seed)
    for _ in range(samples):
        c = rng.randrange(q)
        if g.evaluate_index(f.evaluate_index(c)) != c:
            return VerifyResult("sampled", False, c)
        if f.evaluate_index(g.evaluate_index(c)) != c:
            return VerifyResult("sampled", False, c)
    return VerifyResult("sampled", True)


def _attach_verification(cert: InverseCertificate, f: Poly, verify, cap, seed):
    if not verify:
        return cert
    res = verify_inverse(f, cert.inverse, cap=cap, seed=seed)
    if not res.ok:
        raise ArithmeticError(
            f"constructed inverse failed verification at index {res.counterexample}")
    cert.verified = res.mode
    return cert


# ---------------------------------------------------------------------------
# The general case.


def check_permutation(m: CyclotomicMapping) -> PermutationDecision:
    """Decide whether a cyclotomic mapping permutes GF(q), with a reason."""
    cyc = m.cyc
    field = cyc.field
    s = cyc.s
    prod = 1
    for r in m.r:
        prod = prod * r % s if s > 1 else 0
    g = math.gcd(prod, s)
    if g != 1:
        return PermutationDecision(
            False, f"gcd of the branch exponent product with s = {s} is {g}")
    powers = tuple(
        field.mul(field.pow(a, s), field.pow(cyc.omega, i * r))
        for i, (a, r) in enumerate(zip(m.a, m.r)))
    seen: dict[int, int] = {}
    for i, v in enumerate(powers):
        if v in seen:
            return PermutationDecision(
                False,
                f"branches {seen[v]} and {i} send their cosets onto the same coset",
                powers)
        seen[v] = i
    return PermutationDecision(True, None, powers)


def invert_mapping(m: CyclotomicMapping, verify: bool = True, cap=None,
                   seed=DEFAULT_SEED) -> InverseCertificate:
    """Closed-form compositional inverse of a permuting cyclotomic mapping.

    Raises NotAPermutationError when the permutation criterion fails.  The
    result has at most d^2 terms.
    """
    decision = check_permutation(m)
    if not decision:
        raise NotAPermutationError(decision.reason)
    cyc = m.cyc
    field = cyc.field
    d, s, omega = cyc.d, cyc.s, cyc.omega
    branches = tuple(exponent_bezout(r, s) for r in m.r)
    inv_d = field.inv(field.scalar(d))
    mul, powr = field.mul, field.pow
    n1 = field.q - 1
    terms = []
    for i in range(d):
        rt, t = branches[i]
        ia = field.inv(m.a[i])
        ri = m.r[i]
        for j in range(d):
            e = rt + j * s
            c = mul(inv_d, mul(powr(omega, i * (t - j * ri)), powr(ia, e)))
            terms.append((_term_exp(e, n1), c))
    cert = InverseCertificate(Poly(field, terms), branches)
    return _attach_verification(cert, m.to_poly() if verify else None,
                                verify, cap, seed)


# ---------------------------------------------------------------------------
# Two cosets (d = 2, q odd).


def two_coset_poly(field: Field, a0, a1, r0: int, r1: int) -> Poly:
    """(a0/2) x^r0 (1 + x^s) + (a1/2) x^r1 (1 - x^s) with s = (q-1)/2."""
    if field.p == 2:
        raise ValueError("two-coset mappings need odd q")
    if r0 < 1 or r1 < 1:
        raise ValueError("exponents must be positive")
    s = (field.q - 1) // 2
    a0 = field.index_of(a0)
    a1 = field.index_of(a1)
    if a0 == 0 or a1 == 0:
        raise ValueError("branch coefficients must be nonzero")
    half = field.inv(field.scalar(2))
    c0 = field.mul(half, a0)
    c1 = field.mul(half, a1)
    return Poly(field, [(r0, c0), (r0 + s, c0), (r1, c1), (r1 + s, field.neg(c1))])


def invert_two_cosets(m: CyclotomicMapping, verify: bool = True, cap=None,
                      seed=DEFAULT_SEED) -> InverseCertificate:
    """Inverse of a d = 2 mapping over odd q, via the two-term closed form.

    The permutation criterion specializes to gcd(r0*r1, s) = 1 and
    (a0*a1)^s = (-1)^(r1+1); NotAPermutationError reports which part broke.
    """
    cyc = m.cyc
    field = cyc.field
    if cyc.d != 2:
        raise ValueError(f"two-coset inversion needs d = 2, got d = {cyc.d}")
    if field.p == 2:
        raise ValueError("two-coset inversion needs odd q")
    a0, a1 = m.a
    r0, r1 = m.r
    s = cyc.s
    if math.gcd(r0 * r1, s) != 1:
        raise NotAPermutationError(
            f"gcd(r0*r1, s) = {math.gcd(r0 * r1, s)} != 1")
    sign = 1 if r1 % 2 == 1 else field.neg(1)  # (-1)^(r1+1)
    if field.pow(field.mul(a0, a1), s) != sign:
        raise NotAPermutationError("(a0*a1)^s != (-1)^(r1+1)")
    b0 = exponent_bezout(r0, s)
    b1 = exponent_bezout(r1, s)
    half = field.inv(field.scalar(2))
    ia0 = field.inv(a0)
    ia1 = field.inv(a1)
    mul, powr = field.mul, field.pow
    # Terms of (1/2)(x/a0)^rt0 (1 + (x/a0)^s)
    #       + (1/2)(-1)^t1 (x/a1)^rt1 (1 + (-1)^r1 (x/a1)^s).
    c1 = half if b1.t % 2 == 0 else field.neg(half)
    c1s = c1 if r1 % 2 == 0 else field.neg(c1)
    n1 = field.q - 1
    terms = [
        (_term_exp(b0.r_tilde, n1), mul(half, powr(ia0, b0.r_tilde))),
        (b0.r_tilde + s, mul(half, powr(ia0, b0.r_tilde + s))),
        (_term_exp(b1.r_tilde, n1), mul(c1, powr(ia1, b1.r_tilde))),
        (b1.r_tilde + s, mul(c1s, powr(ia1, b1.r_tilde + s))),
    ]
    cert = InverseCertificate(Poly(field, terms), (b0, b1))
    return _attach_verification(cert, m.to_poly() if verify else None,
                                verify, cap, seed)


def self_inverse_two_cosets(field: Field, r0: int, r1: int) -> Poly:
    """Build (1/2) x^r0 (1 + x^s) + (1/2) x^r1 (1 - x^s), a self-inverse PP.

    Needs q odd, s | r0^2 - 1 and 2s | r1^2 - 1 with s = (q-1)/2; under
    those conditions the polynomial permutes GF(q) and equals its own
    compositional inverse.
    """
    if field.p == 2:
        raise ValueError("self-inverse two-coset family needs odd q")
    if r0 < 1 or r1 < 1:
        raise ValueError("exponents must be positive")
    s = (field.q - 1) // 2
    if (r0 * r0 - 1) % s:
        raise ValueError(f"s = {s} must divide r0^2 - 1 = {r0 * r0 - 1}")
    if (r1 * r1 - 1) % (2 * s):
        raise ValueError(f"2s = {2 * s} must divide r1^2 - 1 = {r1 * r1 - 1}")
    return two_coset_poly(field, 1, 1, r0, r1)


# ---------------------------------------------------------------------------
# Two distinct branches (d >= 3): a0 x^r0 on D0, a1 x^r1 elsewhere.


def two_branch_poly(field: Field, d: int, a0, a1, r0: int, r1: int) -> Poly:
    """(1/d)(a0 x^r0 - a1 x^r1)(1 + x^s + ... + x^((d-1)s)) + a1 x^r1."""
    cyc = Cyclotomy(field, d)
    s = cyc.s
    a0 = field.index_of(a0)
    a1 = field.index_of(a1)
    if a0 == 0 or a1 == 0:
        raise ValueError("branch coefficients must be nonzero")
    if r0 < 1 or r1 < 1:
        raise ValueError("exponents must be positive")
    inv_d = field.inv(field.scalar(d))
    c0 = field.mul(inv_d, a0)
    c1 = field.neg(field.mul(inv_d, a1))
    terms = [(r1, a1)]
    for j in range(d):
        terms.append((r0 + j * s, c0))
        terms.append((r1 + j * s, c1))
    return Poly(field, terms)


def check_two_branches(field: Field, d: int, a0, a1, r0: int, r1: int) -> PermutationDecision:
    """Permutation test for the two-branch family: a0 x^r0 on D0, a1 x^r1 off it.

    Permutes GF(q) iff gcd(r0*r1, s) = 1, gcd(r1, d) = 1 and a0^s = a1^s.
    """
    if d < 3:
        raise ValueError(f"two-branch family needs d >= 3, got d = {d}")
    if r0 < 1 or r1 < 1:
        raise ValueError("exponents must be positive")
    cyc = Cyclotomy(field, d)
    s = cyc.s
    a0 = field.index_of(a0)
    a1 = field.index_of(a1)
    if a0 == 0 or a1 == 0:
        raise ValueError("branch coefficients must be nonzero")
    g = math.gcd(r0 * r1, s)
    if g != 1:
        return PermutationDecision(False, f"gcd(r0*r1, s) = {g} != 1")
    g = math.gcd(r1, d)
    if g != 1:
        return PermutationDecision(False, f"gcd(r1, d) = {g} != 1")
    if field.pow(a0, s) != field.pow(a1, s):
        return PermutationDecision(False, "a0^s != a1^s")
    return PermutationDecision(True)


def invert_two_branches(field: Field, d: int, a0, a1, r0: int, r1: int,
                        verify: bool = True, cap=None, seed=DEFAULT_SEED):
    """Decide and invert the two-branch family in one step.

    Returns (decision, certificate); the certificate is None when the
    decision is negative.  The inverse keeps the family's shape:
    (1/d)[(x/a0)^rt0 - (x/a1)^rt1] * sum_j (x/a1)^(js) + (x/a1)^(rt1 + us)
    with u = (r1^-1 mod d) * t1 mod d.
    """
    decision = check_two_branches(field, d, a0, a1, r0, r1)
    if not decision:
        return decision, None
    cyc = Cyclotomy(field, d)
    s = cyc.s
    a0 = field.index_of(a0)
    a1 = field.index_of(a1)
    b0 = exponent_bezout(r0, s)
    b1 = exponent_bezout(r1, s)
    u = pow(r1, -1, d) * b1.t % d
    inv_d = field.inv(field.scalar(d))
    ia0 = field.inv(a0)
    ia1 = field.inv(a1)
    mul, powr = field.mul, field.pow
    neg_inv_d = field.neg(inv_d)
    n1 = field.q - 1
    terms = [(_term_exp(b1.r_tilde + u * s, n1), powr(ia1, b1.r_tilde + u * s))]
    for j in range(d):
        terms.append((_term_exp(b0.r_tilde + j * s, n1),
                      mul(inv_d, mul(powr(ia0, b0.r_tilde), powr(ia1, j * s)))))
        terms.append((_term_exp(b1.r_tilde + j * s, n1),
                      mul(neg_inv_d, powr(ia1, b1.r_tilde + j * s))))
    cert = InverseCertificate(Poly(field, terms), (b0,) + (b1,) * (d - 1), u)
    f = two_branch_poly(field, d, a0, a1, r0, r1) if verify else None
    return decision, _attach_verification(cert, f, verify, cap, seed)


# ---------------------------------------------------------------------------
# Frobenius-exponent family over GF(2^(2n)) with d = 3.


def char2_family_poly(field: Field, i: int, j: int) -> Poly:
    """(x^(2^i) + x^(2^j))(1 + x^s + x^(2s)) + x^(2^j), s = (q-1)/3, q = 4^n."""
    if field.p != 2 or field.n % 2:
        raise ValueError("this family lives over GF(2^(2n))")
    if i < 1 or j < 1:
        raise ValueError("Frobenius exponents i, j must be >= 1")
    s = (field.q - 1) // 3
    terms = [(2**j, 1)]
    for k in range(3):
        terms.append((2**i + k * s, 1))
        terms.append((2**j + k * s, 1))
    return Poly(field, terms)


def invert_char2_family(n: int, i: int, j: int, field: Field | None = None,
                        verify: bool = True, cap=None, seed=DEFAULT_SEED):
    """Build and invert the characteristic-2 family member for (n, i, j).

    Returns (f, certificate).  f is always a permutation of GF(4^n); its
    inverse swaps each Frobenius exponent 2^k for its inverse modulo s and
    shifts the trailing term by u*s, u = (-1)^j * t_j mod 3.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if field is None:
        field = make_field(2, 2 * n)
    elif field.p != 2 or field.n != 2 * n:
        raise ValueError(f"field must be GF(2^{2 * n})")
    f = char2_family_poly(field, i, j)
    s = (field.q - 1) // 3
    bi = exponent_bezout(2**i, s)
    bj = exponent_bezout(2**j, s)
    u = (-1) ** j * bj.t % 3
    n1 = field.q - 1
    terms = [(_term_exp(bj.r_tilde + u * s, n1), 1)]
    for k in range(3):
        terms.append((_term_exp(bi.r_tilde + k * s, n1), 1))
        terms.append((_term_exp(bj.r_tilde + k * s, n1), 1))
    cert = InverseCertificate(Poly(field, terms), (bi, bj, bj), u)
    return f, _attach_verification(cert, f, verify, cap, seed)


# ---------------------------------------------------------------------------
# The shape x^r h(x^s).


def xr_hxs_poly(field: Field, d: int, r: int, h: Poly) -> Poly:
    """x^r * h(x^s) as a reduced polynomial, with s = (q-1)/d."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if h.field != field:
        raise ValueError("h must live over the same field")
    s = Cyclotomy(field, d).s
    return Poly(field, [(r + e * s, c) for e, c in h.terms.items()])


def xr_hxs_mapping(field: Field, d: int, r: int, h: Poly) -> CyclotomicMapping:
    """The mapping with a_i = h(omega^i) and every branch exponent r.

    Raises NotAPermutationError when h vanishes at some omega^i (the map
    then kills a whole coset and cannot permute).
    """
    cyc = Cyclotomy(field, d)
    a = []
    for i in range(d):
        hi = h.evaluate_index(field.pow(cyc.omega, i))
        if hi == 0:
            raise NotAPermutationError(
                f"h vanishes at omega^{i}, so x^r h(x^s) is not a permutation")
        a.append(hi)
    return CyclotomicMapping(cyc, a, [r] * d)


def check_xr_hxs(field: Field, d: int, r: int, h: Poly) -> PermutationDecision:
    """x^r h(x^s) permutes GF(q) iff gcd(r, s) = 1 and x^r h(x)^s permutes
    the d-th roots of unity."""
    if r < 1:
        raise ValueError("r must be >= 1")
    cyc = Cyclotomy(field, d)
    s = cyc.s
    g = math.gcd(r, s)
    if g != 1:
        return PermutationDecision(False, f"gcd(r, s) = {g} != 1")
    powers = []
    for i in range(d):
        hi = h.evaluate_index(field.pow(cyc.omega, i))
        if hi == 0:
            return PermutationDecision(False, f"h vanishes at omega^{i}")
        powers.append(field.mul(field.pow(cyc.omega, i * r), field.pow(hi, s)))
    if len(set(powers)) != d:
        return PermutationDecision(
            False, "x^r h(x)^s does not permute the d-th roots of unity",
            tuple(powers))
    return PermutationDecision(True, None, tuple(powers))


def invert_xr_hxs(field: Field, d: int, r: int, h: Poly, verify: bool = True,
                  cap=None, seed=DEFAULT_SEED) -> InverseCertificate:
    """Inverse of a permuting x^r h(x^s), sharing one Bezout pair across branches."""
    decision = check_xr_hxs(field, d, r, h)
    if not decision:
        raise NotAPermutationError(decision.reason)
    cyc = Cyclotomy(field, d)
    s, omega = cyc.s, cyc.omega
    b = exponent_bezout(r, s)
    inv_d = field.inv(field.scalar(d))
    mul, powr = field.mul, field.pow
    n1 = field.q - 1
    terms = []
    for i in range(d):
        ih = field.inv(h.evaluate_index(powr(omega, i)))
        for j in range(d):
            e = b.r_tilde + j * s
            c = mul(inv_d, mul(powr(omega, i * (b.t - j * r)), powr(ih, e)))
            terms.append((_term_exp(e, n1), c))
    cert = InverseCertificate(Poly(field, terms), (b,) * d)
    f = xr_hxs_poly(field, d, r, h) if verify else None
    return _attach_verification(cert, f, verify, cap, seed)


# ---------------------------------------------------------------------------
# Catalog search for self-inverse mappings.


class SelfInverseEntry(NamedTuple):
    """One catalog row: the parameters and polynomial of a self-inverse PP."""

    q: int
    d: int
    s: int
    r: tuple[int, ...]
    a: tuple[int, ...]
    poly: Poly
    verified: str


def _involution_components(d: int, fixed_opts, pair_opts):
    """Yield complete fragment choices over all involutions of range(d).

    fixed_opts[i] lists the valid (r, a) choices when i is a fixed point;
    pair_opts[(i, k)] lists valid ((r_i, r_k), (a_i, a_k)) choices when i
    and k are swapped.  Involutions with an unsatisfiable component are
    pruned as soon as their smallest index is placed.
    """
    def rec(unmatched, chosen):
        if not unmatched:
            yield chosen
            return
        i = unmatched[0]
        rest = unmatched[1:]
        for opt in fixed_opts[i]:
            yield from rec(rest, chosen + [((i,), opt)])
        for pos, k in enumerate(rest):
            opts = pair_opts.get((i, k))
            if not opts:
                continue
            rest2 = rest[:pos] + rest[pos + 1:]
            for opt in opts:
                yield from rec(rest2, chosen + [((i, k), opt)])

    yield from rec(tuple(range(d)), [])


def _self_inverse_solutions(cyc: Cyclotomy, max_r: int, a_set):
    """Yield (r, a) vectors making the mapping its own compositional inverse.

    A mapping is self-inverse iff it permutes and applying it twice fixes
    every coset pointwise.  Writing c for the induced involution on coset
    indices (branch i lands in coset c(i)), the conditions per orbit of c
    are:  s | r_i * r_c(i) - 1,  a_i^s = omega^(c(i) - i*r_i),  and
    a_c(i) * a_i^(r_c(i)) * omega^(i * (r_i * r_c(i) - 1)/s) = 1.
    The search enumerates orbits first and only then assembles vectors, so
    impossible involutions never expand.
    """
    field = cyc.field
    d, s, omega = cyc.d, cyc.s, cyc.omega
    mul, powr, inv = field.mul, field.pow, field.inv
    rs = [r for r in range(1, max_r + 1) if math.gcd(r, s) == 1]
    a_in = frozenset(a_set)

    fixed_opts = []
    for i in range(d):
        opts = []
        for r in rs:
            if (r * r - 1) % s:
                continue
            w = (r * r - 1) // s
            tgt = powr(omega, i * (1 - r))
            wc = powr(omega, i * w)
            for a in a_set:
                if powr(a, s) == tgt and mul(powr(a, r + 1), wc) == 1:
                    opts.append(((r,), (a,)))
        fixed_opts.append(opts)

    pair_opts = {}
    for i in range(d):
        for k in range(i + 1, d):
            opts = []
            for ri in rs:
                for rk in rs:
                    if (ri * rk - 1) % s:
                        continue
                    w = (ri * rk - 1) // s
                    tgt_i = powr(omega, k - i * ri)
                    tgt_k = powr(omega, i - k * rk)
                    wi = powr(omega, i * w)
                    wk = powr(omega, k * w)
                    for ai in a_set:
                        if powr(ai, s) != tgt_i:
                            continue
                        ak = inv(mul(powr(ai, rk), wi))
                        if ak not in a_in or powr(ak, s) != tgt_k:
                            continue
                        if mul(ai, mul(powr(ak, ri), wk)) != 1:
                            continue
                        opts.append(((ri, rk), (ai, ak)))
            if opts:
                pair_opts[(i, k)] = opts

    for chosen in _involution_components(d, fixed_opts, pair_opts):
        r_vec = [0] * d
        a_vec = [0] * d
        for idxs, (r_part, a_part) in chosen:
            for pos, idx in enumerate(idxs):
                r_vec[idx] = r_part[pos]
                a_vec[idx] = a_part[pos]
        yield tuple(r_vec), tuple(a_vec)


def search_self_inverse(field: Field, max_r: int, a_set=None, d_values=None,
                        cap=None) -> list[SelfInverseEntry]:
    """All self-inverse cyclotomic mappings with r_i <= max_r, as catalog rows.

    a_set restricts the branch coefficients (default: every nonzero
    element); d_values restricts which divisors of q - 1 are searched
    (default: all of them -- for large d the involution count grows fast,
    so bound it when q - 1 has big divisors).  Rows come back sorted by
    (d, r, a) and each is checked exhaustively before inclusion.
    """
    q = field.q
    if q > resolve_cap(cap):
        raise ValueError(f"GF({q}) exceeds the exhaustive cap")
    if max_r < 1:
        raise ValueError("max_r must be >= 1")
    if a_set is None:
        a_set = tuple(range(1, q))
    else:
        a_set = tuple(sorted({field.index_of(a) for a in a_set}))
        if not a_set or a_set[0] == 0:
            raise ValueError("a_set must be nonempty and exclude 0")
    divisors = [d for d in range(1, q) if (q - 1) % d == 0]
    if d_values is None:
        d_values = divisors
    else:
        d_values = sorted({int(d) for d in d_values})
        bad = [d for d in d_values if d not in divisors]
        if bad:
            raise ValueError(f"{bad[0]} does not divide q - 1 = {q - 1}")
    entries = []
    for d in d_values:
        cyc = Cyclotomy(field, d)
        for r_vec, a_vec in _self_inverse_solutions(cyc, max_r, a_set):
            m = CyclotomicMapping(cyc, a_vec, r_vec)
            vals = m.values(cap)
            if any(vals[vals[x]] != x for x in range(q)):
                raise ArithmeticError(
                    f"search produced a non-self-inverse candidate: {m!r}")
            entries.append(SelfInverseEntry(
                q, d, cyc.s, r_vec, a_vec, m.to_poly(), "exhaustive"))
    entries.sort(key=lambda e: (e.d, e.r, e.a))
    return entries


def write_catalog_csv(entries, stream) -> int:
    """Write catalog rows as CSV with a fixed header; returns the row count.

    List-valued columns (r, a, polynomial term list) are JSON-encoded so
    the file round-trips without ambiguity.
    """
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["q", "d", "s", "r", "a", "polynomial", "verified"])
    count = 0
    for e in entries:
        terms = [[exp, e.poly.terms[exp]] for exp in sorted(e.poly.terms)]
        writer.writerow([
            e.q, e.d, e.s,
            json.dumps(list(e.r), separators=(",", ":")),
            json.dumps(list(e.a), separators=(",", ":")),
            json.dumps(terms, separators=(",", ":")),
            e.verified,
        ])
        count += 1
    return count
