"""Piecewise-defined maps on a finite set, with bijection tests and inversion.

This is the blunt instrument the cyclotomic machinery is checked against:
a map given by disjoint parts covering a finite domain, each with its own
rule.  Such a map is a bijection exactly when every rule is injective on
its part and the images of the parts are pairwise disjoint; in that case
the inverse is read off piece by piece.  Nothing here assumes any field
structure beyond what the rules themselves use.
"""

from __future__ import annotations

from .config import resolve_cap
from .polys import Poly


class PiecewiseMap:
    """A map assembled from (part, rule) pairs over a finite domain.

    parts: disjoint iterables of hashable points whose union is the domain.
    rules: one per part -- a Poly (applied to element indices), a dict, or
    any callable.  Rules are evaluated eagerly, so construction costs one
    pass over the domain.
    """

    __slots__ = ("parts", "tables")

    def __init__(self, parts, rules):
        parts = [frozenset(part) for part in parts]
        rules = list(rules)
        if len(parts) != len(rules):
            raise ValueError("need exactly one rule per part")
        total = 0
        union = set()
        for part in parts:
            total += len(part)
            union |= part
        if len(union) != total:
            raise ValueError("parts must be pairwise disjoint")
        self.parts = parts
        self.tables = []
        for part, rule in zip(parts, rules):
            if isinstance(rule, Poly):
                table = {x: rule.evaluate_index(x) for x in part}
            elif isinstance(rule, dict):
                missing = part - rule.keys()
                if missing:
                    raise ValueError(f"rule table missing {len(missing)} points")
                table = {x: rule[x] for x in part}
            else:
                table = {x: rule(x) for x in part}
            self.tables.append(table)

    @classmethod
    def from_mapping(cls, mapping, cap=None) -> "PiecewiseMap":
        """Split a cyclotomic mapping into {0} plus its d coset monomials."""
        field = mapping.cyc.field
        if field.q > resolve_cap(cap):
            raise ValueError(f"GF({field.q}) exceeds the exhaustive cap")
        parts = [frozenset([0])] + mapping.cyc.cosets(cap)
        rules = [{0: 0}] + [
            Poly.monomial(field, a, r) for a, r in zip(mapping.a, mapping.r)
        ]
        return cls(parts, rules)

    def domain(self) -> frozenset:
        out = set()
        for part in self.parts:
            out |= part
        return frozenset(out)

    def as_table(self) -> dict:
        out = {}
        for table in self.tables:
            out.update(table)
        return out

    def evaluate(self, x):
        for table in self.tables:
            if x in table:
                return table[x]
        raise ValueError(f"{x!r} is outside the domain")

    __call__ = evaluate

    def is_permutation(self) -> bool:
        """Each rule injective on its part, images pairwise disjoint.

        Equivalent to bijectivity onto the domain (the domain is finite, so
        injective implies surjective), but failing piecewise pinpoints which
        condition broke; see why_not_permutation.
        """
        return self.why_not_permutation() is None

    def why_not_permutation(self) -> str | None:
        """None when bijective, else a short reason naming the broken piece."""
        seen: dict = {}
        for k, table in enumerate(self.tables):
            values = set(table.values())
            if len(values) != len(table):
                return f"rule {k} is not injective on its part"
            for v in values:
                if v in seen:
                    return f"rules {seen[v]} and {k} have overlapping images"
                seen[v] = k
        if seen.keys() != self.domain():
            return "image is not the domain"
        return None

    def inverse_table(self) -> dict:
        """The inverse map as a dict; raises when not a bijection."""
        reason = self.why_not_permutation()
        if reason is not None:
            raise ValueError(f"not a permutation: {reason}")
        out = {}
        for table in self.tables:
            for x, y in table.items():
                out[y] = x
        return out
