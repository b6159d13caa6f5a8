"""Exact arithmetic in finite fields GF(q) with q = p^n.

Every element is addressed by an integer index in [0, q).  The index
c0 + c1*p + ... + c_{n-1}*p^(n-1) stands for the residue
c0 + c1*a + ... + c_{n-1}*a^(n-1), where a is a root of the monic modulus
polynomial used to build the field.  Index 0 is zero, index 1 is one, and
for prime fields the index of an element is just its value mod p.

A Field carries its modulus and a fixed primitive element xi, chosen
canonically (see make_field), so two fields built from the same (p, n)
agree element by element.  Small fields get full multiplication/addition
tables, mid-sized ones get discrete log/antilog tables, and larger ones
fall back to digit arithmetic; all three tiers compute identical values.

Field methods work on raw indices and skip range checks for speed.  The
FieldElement wrapper adds operator syntax and validation for interactive
work.
"""

from __future__ import annotations

import math

# Build full q x q multiplication/addition tables up to this order.
FULL_TABLE_CAP = 256
# Build discrete log/antilog tables up to this order.
LOG_TABLE_CAP = 1 << 16

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 3317044064679887385961981."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    # Brent's cycle variant; n must be odd, composite, not a prime power caught upstream.
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, r, q = 2, 1, 1
        g, x, ys = 1, 0, 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"failed to factor {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: multiplicity}; factorize(1) == {}."""
    if n < 1:
        raise ValueError("can only factor positive integers")
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(out.items()))


# ---------------------------------------------------------------------------
# Dense polynomial helpers over GF(p), used only for modulus bookkeeping.
# Polynomials are little-endian coefficient lists with no trailing zeros.


def _ptrim(u: list[int]) -> list[int]:
    while u and u[-1] == 0:
        u.pop()
    return u


def _pmul(u: list[int], v: list[int], p: int) -> list[int]:
    if not u or not v:
        return []
    out = [0] * (len(u) + len(v) - 1)
    for i, ci in enumerate(u):
        if ci:
            for j, cj in enumerate(v):
                out[i + j] = (out[i + j] + ci * cj) % p
    return _ptrim(out)


def _pmod(u: list[int], m: list[int], p: int) -> list[int]:
    # m is monic of degree >= 1
    u = u[:]
    dm = len(m) - 1
    while len(u) - 1 >= dm and u:
        c = u[-1]
        if c:
            off = len(u) - 1 - dm
            for i in range(dm):
                u[off + i] = (u[off + i] - c * m[i]) % p
        u.pop()
    return _ptrim(u)


def _ppow_mod(u: list[int], e: int, m: list[int], p: int) -> list[int]:
    out = [1]
    base = _pmod(u, m, p)
    while e:
        if e & 1:
            out = _pmod(_pmul(out, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return out


def _pgcd(u: list[int], v: list[int], p: int) -> list[int]:
    u, v = u[:], v[:]
    while v:
        lead = pow(v[-1], p - 2, p)
        vm = [c * lead % p for c in v]  # make divisor monic
        u, v = v, _pmod(u, vm, p)
    if u and u[-1] != 1:
        lead = pow(u[-1], p - 2, p)
        u = [c * lead % p for c in u]
    return u


def _is_irreducible(f: list[int], p: int) -> bool:
    """Irreducibility over GF(p) via gcd with iterated Frobenius powers.

    f is monic.  A reducible polynomial of degree m has a factor of degree
    at most m // 2, and the degree-k factors of f all divide
    gcd(f, x^(p^k) - x), so scanning k = 1 .. m // 2 is exhaustive.
    """
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False
    h = [0, 1]
    for _ in range(m // 2):
        h = _ppow_mod(h, p, f, p)
        diff = h[:]
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(_ptrim(diff), f, p)) - 1 != 0:
            return False
    return True


def min_irreducible(p: int, n: int) -> list[int]:
    """The lexicographically smallest monic irreducible of degree n over GF(p).

    Candidates x^n + c_{n-1} x^(n-1) + ... + c_0 are ordered by the integer
    c_0 + c_1 p + ... + c_{n-1} p^(n-1), i.e. low-degree coefficients weigh
    least and are minimized first.
    """
    if n == 1:
        return [0, 1]
    for code in range(p**n):
        coeffs = []
        x = code
        for _ in range(n):
            x, r = divmod(x, p)
            coeffs.append(r)
        coeffs.append(1)
        if _is_irreducible(coeffs, p):
            return coeffs
    raise ArithmeticError(f"no irreducible of degree {n} over GF({p})")  # unreachable


class Field:
    """GF(p^n) with integer-indexed elements.

    Arithmetic methods (add, mul, inv, pow, ...) take and return raw
    indices.  Use element() to get operator-friendly FieldElement values.
    """

    __slots__ = (
        "p", "n", "q", "modulus", "xi", "factorization",
        "_exp", "_log", "_mul_rows", "_add_rows", "_inv_tab", "_neg_tab",
        "_mod_int",
    )

    def __init__(self, p: int, n: int = 1, modulus=None, xi=None):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if n < 1:
            raise ValueError(f"extension degree must be >= 1, got {n}")
        self.p = p
        self.n = n
        self.q = q = p**n
        if modulus is None:
            modulus = min_irreducible(p, n)
        else:
            modulus = [int(c) for c in modulus]
            if len(modulus) != n + 1:
                raise ValueError(f"modulus must have degree {n}")
            if modulus[-1] != 1:
                raise ValueError("modulus must be monic")
            if any(not 0 <= c < p for c in modulus):
                raise ValueError("modulus coefficients must lie in [0, p)")
            if not _is_irreducible(modulus, p):
                raise ValueError("modulus is not irreducible")
        self.modulus = tuple(modulus)
        # Modulus packed as an integer in base p for the p == 2 fast path.
        self._mod_int = sum(c << i for i, c in enumerate(modulus)) if p == 2 else 0
        self._exp = self._log = None
        self._mul_rows = self._add_rows = None
        self._inv_tab = self._neg_tab = None
        self.factorization = factorize(q - 1) if q > 2 else {}
        if xi is None:
            xi = self._find_primitive()
        else:
            xi = int(xi)
            if not 1 <= xi < q or not self._is_primitive(xi):
                raise ValueError(f"xi = {xi} does not generate the multiplicative group")
        self.xi = xi
        self._build_tables()

    # -- construction helpers ------------------------------------------------

    def _is_primitive(self, a: int) -> bool:
        n1 = self.q - 1
        return a != 0 and all(self.pow(a, n1 // ell) != 1 for ell in self.factorization)

    def _find_primitive(self) -> int:
        for cand in range(1, self.q):
            if self._is_primitive(cand):
                return cand
        raise ArithmeticError("no primitive element found")  # unreachable

    def _build_tables(self):
        q = self.q
        if q > LOG_TABLE_CAP:
            return
        exp = [1] * (q - 1)
        for k in range(1, q - 1):
            exp[k] = self._mul_generic(exp[k - 1], self.xi)
        log = [-1] * q
        for k, v in enumerate(exp):
            log[v] = k
        self._exp, self._log = exp, log
        if q > FULL_TABLE_CAP:
            return
        n1 = q - 1
        mul_rows = [[0] * q]
        for a in range(1, q):
            la = log[a]
            row = [0] * q
            for b in range(1, q):
                row[b] = exp[(la + log[b]) % n1]
            mul_rows.append(row)
        self._mul_rows = mul_rows
        p, n = self.p, self.n
        if n == 1:
            add_rows = [list(range(a, p)) + list(range(a)) for a in range(p)]
        elif p == 2:
            add_rows = [[a ^ b for b in range(q)] for a in range(q)]
        else:
            add_rows = [[self._add_generic(a, b) for b in range(q)] for a in range(q)]
        self._add_rows = add_rows
        self._inv_tab = [0] + [exp[(n1 - log[a]) % n1] for a in range(1, q)]
        self._neg_tab = [self._add_rows[a].index(0) for a in range(q)]

    # -- element encoding ----------------------------------------------------

    def decode(self, index: int) -> tuple[int, ...]:
        """Coefficients (c0, ..., c_{n-1}) of the element with this index."""
        if not 0 <= index < self.q:
            raise ValueError(f"index {index} out of range for GF({self.q})")
        if self.n == 1:
            return (index,)
        out = []
        for _ in range(self.n):
            index, r = divmod(index, self.p)
            out.append(r)
        return tuple(out)

    def encode(self, coeffs) -> int:
        """Index of the element with the given coefficient sequence."""
        coeffs = list(coeffs)
        if len(coeffs) > self.n:
            raise ValueError(f"too many coefficients for GF({self.q})")
        index = 0
        for c in reversed(coeffs):
            if not 0 <= c < self.p:
                raise ValueError(f"coefficient {c} out of range [0, {self.p})")
            index = index * self.p + c
        return index

    def scalar(self, k: int) -> int:
        """Index of the prime-subfield element k * 1."""
        return k % self.p

    # -- arithmetic on indices -------------------------------------------------

    def _add_generic(self, a: int, b: int) -> int:
        p, n = self.p, self.n
        if n == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        out = 0
        mult = 1
        for _ in range(n):
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += (ra + rb) % p * mult
            mult *= p
        return out

    def _mul_generic(self, a: int, b: int) -> int:
        p, n = self.p, self.n
        if n == 1:
            return a * b % p
        if p == 2:
            m, r = self._mod_int, 0
            top = 1 << n
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= m
            return r
        da = self.decode(a)
        db = self.decode(b)
        prod = [0] * (2 * n - 1)
        for i, ci in enumerate(da):
            if ci:
                for j, cj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ci * cj) % p
        mod = self.modulus
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if c:
                off = k - n
                for t in range(n):
                    prod[off + t] = (prod[off + t] - c * mod[t]) % p
        return self.encode(prod[:n])

    def add(self, a: int, b: int) -> int:
        rows = self._add_rows
        if rows is not None:
            return rows[a][b]
        return self._add_generic(a, b)

    def neg(self, a: int) -> int:
        tab = self._neg_tab
        if tab is not None:
            return tab[a]
        p, n = self.p, self.n
        if n == 1:
            return -a % p
        if p == 2:
            return a
        out = 0
        mult = 1
        for _ in range(n):
            a, ra = divmod(a, p)
            out += -ra % p * mult
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        rows = self._mul_rows
        if rows is not None:
            return rows[a][b]
        log = self._log
        if log is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[(log[a] + log[b]) % (self.q - 1)]
        return self._mul_generic(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        tab = self._inv_tab
        if tab is not None:
            return tab[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """a^e with 0^0 == 1; exponents of any sign and size are accepted."""
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroDivisionError("0 cannot be raised to a negative power")
        n1 = self.q - 1
        e %= n1
        log = self._log
        if log is not None:
            return self._exp[log[a] * e % n1]
        out = 1
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        n1 = self.q - 1
        log = self._log
        if log is not None:
            return n1 // math.gcd(log[a], n1)
        o = n1
        for ell in self.factorization:
            while o % ell == 0 and self.pow(a, o // ell) == 1:
                o //= ell
        return o

    def dlog(self, base: int, target: int) -> int:
        """Least k >= 0 with base^k == target.

        Raises ValueError when target is outside the cyclic group generated
        by base.  Uses the log table when present, else baby-step/giant-step.
        """
        if base == 0 or target == 0:
            raise ValueError("discrete log is defined on nonzero elements")
        n1 = self.q - 1
        log = self._log
        if log is not None:
            lb, lt = log[base], log[target]
            g = math.gcd(lb, n1)
            if lt % g:
                raise ValueError("target is not a power of base")
            m = n1 // g
            return (lt // g) * pow(lb // g % m, -1, m) % m if m > 1 else 0
        order = self.order(base)
        if self.pow(target, order) != 1:
            raise ValueError("target is not a power of base")
        m = math.isqrt(order - 1) + 1
        baby: dict[int, int] = {}
        cur = 1
        for j in range(m):
            baby.setdefault(cur, j)
            cur = self.mul(cur, base)
        stride = self.inv(cur)  # base^(-m)
        g = target
        for i in range(m + 1):
            if g in baby:
                return (i * m + baby[g]) % order
            g = self.mul(g, stride)
        raise ValueError("target is not a power of base")  # unreachable

    # -- wrappers and plumbing -------------------------------------------------

    def element(self, value) -> "FieldElement":
        """Wrap an index (or another element of this field) as a FieldElement."""
        if isinstance(value, FieldElement):
            if value.field is not self and value.field != self:
                raise ValueError("element belongs to a different field")
            return FieldElement(self, value.index)
        value = int(value)
        if not 0 <= value < self.q:
            raise ValueError(f"index {value} out of range for GF({self.q})")
        return FieldElement(self, value)

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        """Iterate all q elements as FieldElement values, index order."""
        for i in range(self.q):
            yield FieldElement(self, i)

    def index_of(self, value) -> int:
        """Coerce a FieldElement of this field, or a raw index, to an index."""
        if isinstance(value, FieldElement):
            if value.field is not self and value.field != self:
                raise ValueError("element belongs to a different field")
            return value.index
        value = int(value)
        if not 0 <= value < self.q:
            raise ValueError(f"index {value} out of range for GF({self.q})")
        return value

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "modulus": list(self.modulus),
            "xi": self.xi,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Field":
        """Rebuild a field from its dict form; omitted keys take defaults."""
        modulus = d.get("modulus")
        xi = d.get("xi")
        return cls(int(d["p"]), int(d.get("n", 1)), modulus,
                   None if xi is None else int(xi))

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p, self.n, self.modulus, self.xi) == (
            other.p, other.n, other.modulus, other.xi)

    def __hash__(self):
        return hash((self.p, self.n, self.modulus, self.xi))

    def __repr__(self):
        if self.n == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.n})"


class FieldElement:
    """A field element with operator syntax; thin wrapper over an index.

    Mixed-field operations raise ValueError.  Plain ints mix in as indices
    of the same field (for prime fields that is the value mod p).
    """

    __slots__ = ("field", "index")

    def __init__(self, field: Field, index: int):
        self.field = field
        self.index = index

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("cannot mix elements of different fields")
            return other.index
        if isinstance(other, int):
            if not 0 <= other < self.field.q:
                raise ValueError(f"index {other} out of range for GF({self.field.q})")
            return other
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.index, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.index, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(b, self.index))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.index, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.index, b))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(b, self.index))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.index, e))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.index))

    def order(self) -> int:
        return self.field.order(self.index)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.index == other.index
        if isinstance(other, int):
            return self.index == other
        return NotImplemented

    def __hash__(self):
        # Matches hash(int) because __eq__ admits plain indices.
        return hash(self.index)

    def __bool__(self):
        return self.index != 0

    def __int__(self):
        return self.index

    def __repr__(self):
        return f"GF({self.field.q}):{self.index}"


def make_field(p: int, n: int = 1, modulus=None) -> Field:
    """Build GF(p^n) with canonical choices.

    When modulus is omitted, the lexicographically smallest monic
    irreducible of degree n is used (low-degree coefficients compared
    first).  xi is always the generator of smallest index.
    """
    return Field(p, n, modulus)


def field_of_order(q: int) -> Field:
    """Build the canonical field with exactly q elements."""
    if q < 2:
        raise ValueError(f"no field of order {q}")
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, n), = fac.items()
    return make_field(p, n)
