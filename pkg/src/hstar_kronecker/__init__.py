"""
hstar-kronecker - h*-polynomials of the simplices Delta_(1,q)

Exact computation of h*- and g-polynomials, Kronecker tests, geometric-series
factorizations and Ehrhart polynomials, with exhaustive searches over
two- and three-support q-vectors.
"""

# Polynomials
from hstar_kronecker.polyring import (
    IntPoly,
    GeomSeries,
    CyclotomicMultiset,
    poly_mul,
    try_exact_div,
    poly_exact_div,
    eval_at,
    is_palindromic,
    geometric_series,
    cyclotomic,
    is_kronecker,
)

# Simplices
from hstar_kronecker.simplex import (
    SupportedQ,
    SDivision,
    parse_qspec,
    format_qspec,
    is_reflexive,
    ell,
    desirable_division,
    hstar,
    g_poly,
    g_poly_via_crt,
    crt_alpha,
)

# Factorizations
from hstar_kronecker.factorizer import (
    GeomFactorization,
    find_geometric_factorization,
    hstar_geometric_factorization,
    FamilyInstance,
    family_tag,
    classify_2_2km1,
)

# Ehrhart
from hstar_kronecker.ehrhart import (
    RationalPoly,
    ehrhart_from_hstar,
    is_ehrhart_positive,
    count_lattice_points,
    count_interior_points,
)

# Explorer
from hstar_kronecker.explorer import (
    SearchRecord,
    search_two_support,
    search_three_support,
    find_kronecker_without_geomfact,
    verify_fibonacci,
    verify_family_theorems,
    verify_classification_2odd,
    verify_ehrhart_positivity,
    diff_table1,
)

from hstar_kronecker.config import SearchBounds
from hstar_kronecker.errors import HStarError

__version__ = "0.1.0"

__all__ = [
    # Polynomials
    "IntPoly",
    "GeomSeries",
    "CyclotomicMultiset",
    "poly_mul",
    "try_exact_div",
    "poly_exact_div",
    "eval_at",
    "is_palindromic",
    "geometric_series",
    "cyclotomic",
    "is_kronecker",
    # Simplices
    "SupportedQ",
    "SDivision",
    "parse_qspec",
    "format_qspec",
    "is_reflexive",
    "ell",
    "desirable_division",
    "hstar",
    "g_poly",
    "g_poly_via_crt",
    "crt_alpha",
    # Factorizations
    "GeomFactorization",
    "find_geometric_factorization",
    "hstar_geometric_factorization",
    "FamilyInstance",
    "family_tag",
    "classify_2_2km1",
    # Ehrhart
    "RationalPoly",
    "ehrhart_from_hstar",
    "is_ehrhart_positive",
    "count_lattice_points",
    "count_interior_points",
    # Explorer
    "SearchRecord",
    "search_two_support",
    "search_three_support",
    "find_kronecker_without_geomfact",
    "verify_fibonacci",
    "verify_family_theorems",
    "verify_classification_2odd",
    "verify_ehrhart_positivity",
    "diff_table1",
    # Configuration and errors
    "SearchBounds",
    "HStarError",
]
