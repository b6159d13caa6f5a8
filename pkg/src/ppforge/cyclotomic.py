"""Cyclotomic cosets of GF(q)* and the piecewise-monomial maps built on them.

Fix a divisor d of q - 1 and write q - 1 = d*s.  The subgroup D0 of s-th
powers (equivalently, s-th roots of unity count... no: the s-element
subgroup {x : x^s is irrelevant}) -- concretely:

    D0 = <xi^d> = {x in GF(q)* : x^s = 1},   Di = xi^i * D0,

so GF(q)* splits into d cosets of size s, and x lands in D_{log_xi(x) mod d}.
The element omega = xi^s generates the d-th roots of unity, and for x in Di
we have x^s = omega^i, which is how membership is decided without a full
discrete log.

A CyclotomicMapping sends 0 to 0 and acts on each coset by its own monomial:

    f(x) = a_i * x^(r_i)   for x in Di.

Such maps are exactly the polynomials of the shape x^r * h(x^s), and every
one of them equals the reduced polynomial

    f(x) = (1/d) * sum_{i, j} a_i * omega^(-i*j) * x^(r_i + j*s),

which to_poly() produces.  The indicator polynomial of a coset is
(1/d) * sum_{j=1}^{d} (x^s / c^s)^j, which equals 1 - (x^s - c^s)^(q-1)
as a reduced polynomial; both views are exposed for cross-checking.
"""

from __future__ import annotations

import math

from .config import resolve_cap
from .fields import Field
from .polys import Poly


class Cyclotomy:
    """The degree-d coset decomposition of GF(q)*: q - 1 = d*s, omega = xi^s."""

    __slots__ = ("field", "d", "s", "omega")

    def __init__(self, field: Field, d: int):
        d = int(d)
        if d < 1 or (field.q - 1) % d != 0:
            raise ValueError(f"d = {d} does not divide q - 1 = {field.q - 1}")
        self.field = field
        self.d = d
        self.s = (field.q - 1) // d
        self.omega = field.pow(field.xi, self.s)
        if field.order(self.omega) != d:
            raise ArithmeticError("omega must have order d")  # xi not primitive

    def coset_index(self, x) -> int:
        """The i with x in Di.  Nonzero x only."""
        field = self.field
        x = field.index_of(x)
        if x == 0:
            raise ValueError("0 lies in no coset")
        log = field._log
        if log is not None:
            return log[x] % self.d
        return field.dlog(self.omega, field.pow(x, self.s))

    def cosets(self, cap=None) -> list[frozenset[int]]:
        """All d cosets as element-index sets, [D0, D1, ..., D_{d-1}]."""
        field = self.field
        if field.q > resolve_cap(cap):
            raise ValueError(f"GF({field.q}) exceeds the exhaustive cap")
        mul = field.mul
        step = field.pow(field.xi, self.d)
        out = []
        start = 1
        for _ in range(self.d):
            cur = start
            members = []
            for _ in range(self.s):
                members.append(cur)
                cur = mul(cur, step)
            out.append(frozenset(members))
            start = mul(start, field.xi)
        return out

    def indicator(self, c) -> Poly:
        """Polynomial equal to 1 on the coset of c, 0 elsewhere (0 included)."""
        field = self.field
        c = field.index_of(c)
        if c == 0:
            raise ValueError("indicator needs a nonzero coset representative")
        inv_d = field.inv(field.scalar(self.d))
        inv_cs = field.inv(field.pow(c, self.s))
        terms = []
        for j in range(1, self.d + 1):
            terms.append((j * self.s, field.mul(inv_d, field.pow(inv_cs, j))))
        return Poly(field, terms)

    def interpolate_on_roots(self, values) -> Poly:
        """The polynomial h of degree < d with h(omega^i) = values[i].

        Inverse discrete Fourier transform over the order-d subgroup:
        coeff_k = (1/d) * sum_i values[i] * omega^(-i*k).
        """
        field = self.field
        d = self.d
        values = [field.index_of(v) for v in values]
        if len(values) != d:
            raise ValueError(f"need exactly {d} values, got {len(values)}")
        inv_d = field.inv(field.scalar(d))
        add, mul, powr = field.add, field.mul, field.pow
        coeffs = []
        for k in range(d):
            acc = 0
            for i, v in enumerate(values):
                acc = add(acc, mul(v, powr(self.omega, -i * k)))
            coeffs.append((k, mul(inv_d, acc)))
        return Poly(field, coeffs)

    def __eq__(self, other):
        if not isinstance(other, Cyclotomy):
            return NotImplemented
        return self.field == other.field and self.d == other.d

    def __hash__(self):
        return hash((self.field, self.d))

    def __repr__(self):
        return f"Cyclotomy({self.field!r}, d={self.d})"


class CyclotomicMapping:
    """f(0) = 0 and f(x) = a_i * x^(r_i) on the coset Di.

    a is a length-d sequence of nonzero field indices, r a length-d
    sequence of positive integer exponents.
    """

    __slots__ = ("cyc", "a", "r")

    def __init__(self, cyc: Cyclotomy, a, r):
        a = tuple(cyc.field.index_of(c) for c in a)
        r = tuple(int(e) for e in r)
        if len(a) != cyc.d or len(r) != cyc.d:
            raise ValueError(f"need exactly {cyc.d} branch coefficients and exponents")
        if any(c == 0 for c in a):
            raise ValueError("branch coefficients must be nonzero")
        if any(e < 1 for e in r):
            raise ValueError("branch exponents must be >= 1")
        self.cyc = cyc
        self.a = a
        self.r = r

    @property
    def field(self) -> Field:
        return self.cyc.field

    def evaluate(self, x):
        field = self.cyc.field
        x = field.index_of(x)
        if x == 0:
            return 0
        i = self.cyc.coset_index(x)
        return field.mul(self.a[i], field.pow(x, self.r[i]))

    __call__ = evaluate

    def values(self, cap=None) -> list[int]:
        """Value at every element, indexed by element index.  Exhaustive."""
        field = self.cyc.field
        q = field.q
        if q > resolve_cap(cap):
            raise ValueError(f"GF({q}) exceeds the exhaustive cap")
        out = [0] * q
        exp, log = field._exp, field._log
        if exp is not None:
            n1 = q - 1
            d = self.cyc.d
            la = [log[c] for c in self.a]
            for m in range(n1):
                i = m % d
                out[exp[m]] = exp[(la[i] + self.r[i] * m) % n1]
        else:
            for x in range(1, q):
                out[x] = self.evaluate(x)
        return out

    def to_poly(self) -> Poly:
        """The canonical reduced polynomial agreeing with this map on GF(q)."""
        field = self.cyc.field
        d, s = self.cyc.d, self.cyc.s
        omega = self.cyc.omega
        inv_d = field.inv(field.scalar(d))
        mul, powr = field.mul, field.pow
        terms = []
        for i in range(d):
            ai = mul(inv_d, self.a[i])
            ri = self.r[i]
            for j in range(d):
                w = powr(omega, -i * j)
                terms.append((ri + j * s, mul(ai, w)))
        return Poly(field, terms)

    def to_dict(self) -> dict:
        return {
            "field": self.cyc.field.to_dict(),
            "d": self.cyc.d,
            "a": list(self.a),
            "r": list(self.r),
        }

    @classmethod
    def from_dict(cls, dct: dict, field: Field | None = None) -> "CyclotomicMapping":
        if field is None:
            field = Field.from_dict(dct["field"])
        cyc = Cyclotomy(field, int(dct["d"]))
        return cls(cyc, dct["a"], dct["r"])

    def __eq__(self, other):
        if not isinstance(other, CyclotomicMapping):
            return NotImplemented
        return self.cyc == other.cyc and self.a == other.a and self.r == other.r

    def __hash__(self):
        return hash((self.cyc, self.a, self.r))

    def __repr__(self):
        return f"CyclotomicMapping(d={self.cyc.d}, a={self.a}, r={self.r})"


def fit_mapping(f: Poly, d: int, cap=None) -> CyclotomicMapping | None:
    """Recognize f as a d-coset cyclotomic mapping, or return None.

    Works from the value table: on each coset the exponent is pinned down
    modulo s by two points (then normalized into [1, s]) and the
    coefficient follows; every coset point is checked before accepting.
    """
    field = f.field
    q = field.q
    if q > resolve_cap(cap):
        raise ValueError(f"GF({q}) exceeds the exhaustive cap")
    cyc = Cyclotomy(field, d)
    s = cyc.s
    vals = f.values(cap)
    if vals[0] != 0:
        return None
    mul, powr = field.mul, field.pow
    a = []
    r = []
    for i, coset in enumerate(cyc.cosets(cap)):
        members = sorted(coset)
        x0 = members[0]
        y0 = vals[x0]
        if y0 == 0:
            return None
        if s == 1:
            ri = 1
        else:
            x1 = members[1]
            y1 = vals[x1]
            if y1 == 0:
                return None
            # y1/y0 = (x1/x0)^ri with x1/x0 of order dividing s in <xi^d>
            base = field.div(x1, x0)
            try:
                k = field.dlog(base, field.div(y1, y0))
            except ValueError:
                return None
            o = field.order(base)
            # ri is determined mod o; normalize into [1, s]
            ri = k % o
            if ri == 0:
                ri = o
        ai = field.div(y0, powr(x0, ri))
        for x in members:
            if mul(ai, powr(x, ri)) != vals[x]:
                break
        else:
            a.append(ai)
            r.append(ri)
            continue
        # retry exponents ri + o, ri + 2o, ... up to s before giving up
        found = False
        if s > 1:
            o = field.order(field.div(members[1], members[0]))
            cand = ri + o
            while cand <= s:
                ai = field.div(y0, powr(x0, cand))
                if all(mul(ai, powr(x, cand)) == vals[x] for x in members):
                    a.append(ai)
                    r.append(cand)
                    found = True
                    break
                cand += o
        if not found:
            return None
    return CyclotomicMapping(cyc, a, r)
