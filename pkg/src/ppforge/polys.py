"""Sparse polynomials over GF(q), kept reduced modulo x^q - x.

As functions on GF(q), x^q = x, so exponents live in {0} U [1, q-1]:
exponent 0 stays (the constant term), and e >= 1 reduces to
((e - 1) mod (q - 1)) + 1.  This keeps x^(q-1) distinct from 1 -- they
differ at x = 0 -- so reduction never changes a polynomial's values.
Evaluation uses the convention 0^0 = 1.

Coefficients are raw field indices (see fields.Field); FieldElement
values are accepted anywhere a coefficient or point is expected.
"""

from __future__ import annotations

from .config import resolve_cap
from .fields import Field, FieldElement


def reduce_exponent(e: int, q: int) -> int:
    """Canonical exponent of x^e as a function on GF(q)."""
    if e < 0:
        raise ValueError("exponents must be nonnegative")
    if e == 0:
        return 0
    return (e - 1) % (q - 1) + 1


class Poly:
    """A polynomial in canonical sparse form: {exponent: nonzero coefficient}."""

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms=()):
        """Build from {e: c} or [(e, c), ...]; repeats are summed, zeros dropped."""
        self.field = field
        q = field.q
        acc: dict[int, int] = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for e, c in items:
            e = reduce_exponent(int(e), q)
            c = field.index_of(c)
            prev = acc.get(e)
            if prev is None:
                acc[e] = c
            else:
                acc[e] = field.add(prev, c)
        self.terms = {e: c for e, c in acc.items() if c}

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field)

    @classmethod
    def constant(cls, field: Field, c) -> "Poly":
        return cls(field, [(0, c)])

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, [(1, 1)])

    @classmethod
    def monomial(cls, field: Field, c, e: int) -> "Poly":
        return cls(field, [(e, c)])

    # -- evaluation -------------------------------------------------------------

    def evaluate(self, x):
        """Value at x; index in, index out, or FieldElement in and out."""
        if isinstance(x, FieldElement):
            return FieldElement(self.field, self.evaluate_index(x.index))
        return self.evaluate_index(self.field.index_of(x))

    __call__ = evaluate

    def evaluate_index(self, x: int) -> int:
        field = self.field
        acc = self.terms.get(0, 0)
        if x == 0:
            return acc
        add, mul, powr = field.add, field.mul, field.pow
        for e, c in self.terms.items():
            if e:
                acc = add(acc, mul(c, powr(x, e)))
        return acc

    def values(self, cap=None) -> list[int]:
        """Value at every element, indexed by element index.  Exhaustive."""
        field = self.field
        q = field.q
        if q > resolve_cap(cap):
            raise ValueError(f"GF({q}) exceeds the exhaustive cap")
        c0 = self.terms.get(0, 0)
        out = [c0] * q
        exp, log = field._exp, field._log
        if exp is not None:
            n1 = q - 1
            add = field.add
            for e, c in self.terms.items():
                if not e:
                    continue
                lc = log[c]
                for m in range(n1):
                    x = exp[m]
                    out[x] = add(out[x], exp[(lc + e * m) % n1])
        else:
            for x in range(1, q):
                out[x] = self.evaluate_index(x)
        return out

    def is_permutation(self, cap=None) -> bool:
        """True when this polynomial permutes GF(q), by full evaluation."""
        vals = self.values(cap)
        return len(set(vals)) == self.field.q

    # -- ring operations ----------------------------------------------------------

    def _check_field(self, other: "Poly"):
        if self.field is not other.field and self.field != other.field:
            raise ValueError("cannot mix polynomials over different fields")

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_field(other)
        return Poly(self.field, list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_field(other)
        neg = self.field.neg
        items = list(self.terms.items()) + [(e, neg(c)) for e, c in other.terms.items()]
        return Poly(self.field, items)

    def __neg__(self):
        neg = self.field.neg
        return Poly(self.field, [(e, neg(c)) for e, c in self.terms.items()])

    def __mul__(self, other):
        field = self.field
        if isinstance(other, Poly):
            self._check_field(other)
            mul = field.mul
            items = []
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    items.append((e1 + e2, mul(c1, c2)))
            return Poly(field, items)
        c = field.index_of(other)
        mul = field.mul
        return Poly(field, [(e, mul(c0, c)) for e, c0 in self.terms.items()])

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("polynomial powers must be nonnegative")
        out = Poly.constant(self.field, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def compose(self, other: "Poly") -> "Poly":
        """self(other(x)), reduced mod x^q - x."""
        if not isinstance(other, Poly):
            raise TypeError("compose expects a Poly")
        self._check_field(other)
        out = Poly.zero(self.field)
        for e, c in sorted(self.terms.items()):
            out = out + other**e * c
        return out

    # -- structure ---------------------------------------------------------------

    def degree(self) -> int:
        """Largest exponent present; -1 for the zero polynomial."""
        return max(self.terms, default=-1)

    def coeff(self, e: int) -> int:
        return self.terms.get(reduce_exponent(e, self.field.q), 0)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, tuple(sorted(self.terms.items()))))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                parts.append(str(c))
            else:
                xe = "x" if e == 1 else f"x^{e}"
                parts.append(xe if c == 1 else f"{c}{xe}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self.field!r}, {self!s})"

    # -- serialization -------------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "field": self.field.to_dict(),
            "terms": [[e, self.terms[e]] for e in sorted(self.terms)],
        }

    @classmethod
    def from_dict(cls, d: dict, field: Field | None = None) -> "Poly":
        """Rebuild from to_dict() output; terms must be strictly increasing."""
        if field is None:
            field = Field.from_dict(d["field"])
        terms = d["terms"]
        exps = [int(e) for e, _ in terms]
        if any(b <= a for a, b in zip(exps, exps[1:])):
            raise ValueError("term exponents must be strictly increasing")
        if exps and (exps[0] < 0 or exps[-1] >= field.q):
            raise ValueError(f"term exponents must lie in [0, {field.q})")
        return cls(field, [(int(e), int(c)) for e, c in terms])


def interpolate(field: Field, values) -> Poly:
    """The unique polynomial of degree < q taking values[i] at index i.

    Closed form: the interpolant of g is
        b_0 = g(0),
        b_k = -sum_{c != 0} g(c) c^(q-1-k)   for 1 <= k <= q - 2,
    and b_{q-1} gets the same sum minus g(0).  This is Lagrange
    interpolation with the basis (1 - (x - c)^(q-1)) expanded.
    """
    q = field.q
    values = [field.index_of(v) for v in values]
    if len(values) != q:
        raise ValueError(f"need exactly {q} values, got {len(values)}")
    sub, mul = field.sub, field.mul
    b = [0] * q
    b[0] = values[0]
    for c in range(1, q):
        g = values[c]
        if not g:
            continue
        t = g  # g * c^(q-1-k) for k = q-1 down to 1
        for k in range(q - 1, 0, -1):
            b[k] = sub(b[k], t)
            t = mul(t, c)
    b[q - 1] = sub(b[q - 1], values[0])
    return Poly(field, enumerate(b))


def lagrange_inverse(f: Poly, cap=None) -> Poly:
    """Compositional inverse of a permutation polynomial, by interpolation.

    Independent of any structure in f: inverts the value table directly.
    Raises ValueError when f does not permute its field.
    """
    field = f.field
    q = field.q
    vals = f.values(cap)
    if len(set(vals)) != q:
        raise ValueError(f"{f} is not a permutation of GF({q})")
    table = [0] * q
    for c, y in enumerate(vals):
        table[y] = c
    return interpolate(field, table)
