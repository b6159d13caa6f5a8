"""Cyclotomic mapping permutation polynomials over finite fields.

Build piecewise-monomial mappings on the cosets of an index-d subgroup of
GF(q)*, decide in closed form whether they permute the field, and produce
compositional inverses with verification certificates.  Everything is exact
integer arithmetic on indexed field elements; no floating point anywhere.
"""

from .config import DEFAULT_EXHAUSTIVE_CAP, DEFAULT_SAMPLES, DEFAULT_SEED
from .cyclotomic import Cyclotomy, CyclotomicMapping, fit_mapping
from .fields import Field, FieldElement, field_of_order, make_field, min_irreducible
from .inverses import (
    Branch,
    InverseCertificate,
    NotAPermutationError,
    PermutationDecision,
    SelfInverseEntry,
    VerifyResult,
    char2_family_poly,
    check_permutation,
    check_two_branches,
    check_xr_hxs,
    exponent_bezout,
    invert_char2_family,
    invert_mapping,
    invert_two_branches,
    invert_two_cosets,
    invert_xr_hxs,
    search_self_inverse,
    self_inverse_two_cosets,
    two_branch_poly,
    two_coset_poly,
    verify_inverse,
    write_catalog_csv,
    xr_hxs_mapping,
    xr_hxs_poly,
)
from .piecewise import PiecewiseMap
from .polys import Poly, interpolate, lagrange_inverse, reduce_exponent

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "Cyclotomy",
    "CyclotomicMapping",
    "DEFAULT_EXHAUSTIVE_CAP",
    "DEFAULT_SAMPLES",
    "DEFAULT_SEED",
    "Field",
    "FieldElement",
    "InverseCertificate",
    "NotAPermutationError",
    "PermutationDecision",
    "PiecewiseMap",
    "Poly",
    "SelfInverseEntry",
    "VerifyResult",
    "char2_family_poly",
    "check_permutation",
    "check_two_branches",
    "check_xr_hxs",
    "exponent_bezout",
    "field_of_order",
    "fit_mapping",
    "interpolate",
    "invert_char2_family",
    "invert_mapping",
    "invert_two_branches",
    "invert_two_cosets",
    "invert_xr_hxs",
    "lagrange_inverse",
    "make_field",
    "min_irreducible",
    "reduce_exponent",
    "search_self_inverse",
    "self_inverse_two_cosets",
    "two_branch_poly",
    "two_coset_poly",
    "verify_inverse",
    "write_catalog_csv",
    "xr_hxs_mapping",
    "xr_hxs_poly",
]
