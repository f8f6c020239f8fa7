"""
Simplex Module

The q-vector data model and the formulas producing h* and g for Delta_(1,q):
- qvector: support/multiplicity form, reflexivity, ell, s-divisions
- gpoly: h* and g by enumeration, the residue-vector form of g, and the
  constructions that extend a q-vector
"""

from .qvector import (
    SupportedQ,
    SDivision,
    support,
    parse_qspec,
    format_qspec,
    is_r_multiplicity,
    is_reflexive,
    ell,
    desirable_division,
    all_desirable_divisions,
)

from .gpoly import (
    hstar,
    g_poly,
    hibi_reflexive,
    interior_point_count,
    crt_alpha,
    crt_alpha_pairwise_coprime,
    crt_indices,
    omega,
    g_poly_via_crt,
    two_support_q,
    g_two_support_fast,
    extend_by_lcm,
    free_sum,
)

__all__ = [
    # Q-vectors
    "SupportedQ",
    "SDivision",
    "support",
    "parse_qspec",
    "format_qspec",
    "is_r_multiplicity",
    "is_reflexive",
    "ell",
    "desirable_division",
    "all_desirable_divisions",
    # h* and g
    "hstar",
    "g_poly",
    "hibi_reflexive",
    "interior_point_count",
    "crt_alpha",
    "crt_alpha_pairwise_coprime",
    "crt_indices",
    "omega",
    "g_poly_via_crt",
    "two_support_q",
    "g_two_support_fast",
    "extend_by_lcm",
    "free_sum",
]
