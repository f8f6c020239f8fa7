from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from hstar_kronecker.ehrhart import (
    RationalPoly,
    count_interior_points,
    count_lattice_points,
    ehrhart_from_hstar,
    is_ehrhart_positive,
)
from hstar_kronecker.errors import DegreeExceedsDimensionError, InvalidInputError, ScaleExceededError
from hstar_kronecker.polyring import IntPoly
from hstar_kronecker.simplex import SupportedQ, hstar, is_reflexive, support


def small_q_vectors(n_max: int, q_max: int):
    for n in range(1, n_max + 1):
        for entries in combinations_with_replacement(range(1, q_max + 1), n):
            yield support(entries)


def test_segment():
    poly = ehrhart_from_hstar(IntPoly((1, 1)), 1)
    assert str(poly) == "2 t + 1"
    assert poly(3) == 7


def test_triangle():
    poly = ehrhart_from_hstar(IntPoly((1, 1, 1)), 2)
    assert poly.coeffs == (Fraction(1), Fraction(3, 2), Fraction(3, 2))
    assert str(poly) == "3/2 t^2 + 3/2 t + 1"
    assert poly.to_dict() == {"num": [1, 3, 3], "den": [1, 2, 2]}
    assert poly.is_positive()


def test_value_at_zero_is_one():
    q = SupportedQ((2, 5), (7, 5))
    assert ehrhart_from_hstar(hstar(q), q.n)(0) == 1


def test_leading_coefficient_is_normalized_volume():
    q = SupportedQ((2, 5), (7, 5))
    poly = ehrhart_from_hstar(hstar(q), q.n)
    assert poly.degree == 12
    assert poly.coeffs[-1] * 479001600 == 40


def test_rejects_bad_dimension():
    with pytest.raises(DegreeExceedsDimensionError):
        ehrhart_from_hstar(IntPoly((1, 1, 1)), 1)
    with pytest.raises(InvalidInputError):
        ehrhart_from_hstar(IntPoly.one(), -1)


def test_rational_poly_rendering():
    assert str(RationalPoly((1, -1, 1))) == "t^2 - t + 1"
    assert str(RationalPoly((Fraction(-1, 2),))) == "-1/2"
    assert str(RationalPoly(())) == "0"
    assert not RationalPoly((1, -1, 1)).is_positive()
    assert not RationalPoly((1, 0, 1)).is_positive()


def test_is_ehrhart_positive_small():
    assert is_ehrhart_positive(SupportedQ((1,), (2,)))
    assert is_ehrhart_positive(SupportedQ((2, 3), (1, 3)))


# =============================================================================
# Lattice-point oracle
# =============================================================================


def test_oracle_segment_and_triangle():
    assert count_lattice_points(SupportedQ((1,), (1,)), 2) == 5
    assert count_interior_points(SupportedQ((1,), (1,)), 2) == 3
    assert count_lattice_points(SupportedQ((1,), (2,)), 2) == 10
    assert count_lattice_points(SupportedQ((1,), (2,)), 0) == 1


@pytest.mark.parametrize("q", list(small_q_vectors(3, 3)), ids=str)
def test_oracle_matches_ehrhart(q):
    poly = ehrhart_from_hstar(hstar(q), q.n)
    for t in range(0, 4):
        assert count_lattice_points(q, t) == poly(t)


@pytest.mark.parametrize("q", list(small_q_vectors(3, 3)), ids=str)
def test_interior_points_follow_reciprocity(q):
    poly = ehrhart_from_hstar(hstar(q), q.n)
    sign = (-1) ** q.n
    for t in range(1, 4):
        assert count_interior_points(q, t) == sign * poly(-t)
        if is_reflexive(q):
            assert count_interior_points(q, t) == poly(t - 1)


def test_oracle_limits():
    with pytest.raises(ScaleExceededError):
        count_lattice_points(SupportedQ((1,), (7,)), 1)
    with pytest.raises(ScaleExceededError):
        count_lattice_points(SupportedQ((1,), (1,)), 6)
    with pytest.raises(ScaleExceededError):
        count_lattice_points(SupportedQ((6,), (6,)), 5)
    with pytest.raises(InvalidInputError):
        count_lattice_points(SupportedQ((1,), (1,)), -1)


@pytest.mark.slow
def test_oracle_matches_ehrhart_full_range():
    for q in small_q_vectors(5, 3):
        poly = ehrhart_from_hstar(hstar(q), q.n)
        for t in range(0, 5):
            try:
                count = count_lattice_points(q, t)
            except ScaleExceededError:
                continue
            assert count == poly(t), (q, t)
