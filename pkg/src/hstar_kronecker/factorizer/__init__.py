"""
Factorizer Module

Geometric-series factorizations and the families known to have them:
- geometric: complete depth-first factorization search
- families: closed-form family constructors, membership tags and the
  r = (2, 2k - 1) classification predicate
"""

from .geometric import (
    GeomFactorization,
    divide_by_series,
    extend_to_hstar,
    find_geometric_factorization,
    hstar_geometric_factorization,
)

from .families import (
    FamilyInstance,
    family_case0,
    family_case1,
    family_case2,
    family_case3,
    family_532,
    payne_instance,
    family_tag,
    classify_2_2km1,
)

__all__ = [
    # Search
    "GeomFactorization",
    "divide_by_series",
    "extend_to_hstar",
    "find_geometric_factorization",
    "hstar_geometric_factorization",
    # Families
    "FamilyInstance",
    "family_case0",
    "family_case1",
    "family_case2",
    "family_case3",
    "family_532",
    "payne_instance",
    "family_tag",
    "classify_2_2km1",
]
