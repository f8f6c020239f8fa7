from math import prod

import numpy as np
import pytest
from sympy import Poly, cyclotomic_poly, divisors, symbols

from hstar_kronecker.errors import (
    InvalidInputError,
    NotDivisibleError,
    PolynomialDivisionByZero,
    ZeroPolynomialError,
)
from hstar_kronecker.polyring import (
    CyclotomicMultiset,
    GeomSeries,
    IntPoly,
    cyclotomic,
    eval_at,
    geometric_series,
    is_kronecker,
    is_palindromic,
    poly_exact_div,
    poly_mul,
    try_exact_div,
)

z = symbols("z")


def test_trailing_zeros_are_trimmed():
    assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPoly((0, 0)).is_zero
    assert IntPoly.zero().degree == -1


def test_from_exponents_builds_histogram():
    assert IntPoly.from_exponents([0, 2, 2, 5]).coeffs == (1, 0, 2, 0, 0, 1)
    with pytest.raises(InvalidInputError):
        IntPoly.from_exponents([-1])


def test_str_renders_ascending_terms():
    assert str(IntPoly((1, 2, 2, 1))) == "1 + 2z + 2z^2 + z^3"
    assert str(IntPoly((-1, 0, 1))) == "-1 + z^2"
    assert str(IntPoly.zero()) == "0"


def test_poly_mul_small():
    assert poly_mul(IntPoly((1, 1)), IntPoly((1, 0, 1))).coeffs == (1, 1, 1, 1)
    assert poly_mul(IntPoly((1, 1)), IntPoly.zero()).is_zero


def test_poly_mul_large_coefficients_stay_exact():
    big = 1 << 70
    product = poly_mul(IntPoly((big, 1)), IntPoly((big, -1)))
    assert product.coeffs == (big * big, 0, -1)


def test_exact_division():
    a = IntPoly((1, 2, 2, 1))
    assert poly_exact_div(a, IntPoly((1, 1))).coeffs == (1, 1, 1)
    assert try_exact_div(a, IntPoly((1, 0, 1))) is None
    with pytest.raises(NotDivisibleError):
        poly_exact_div(a, IntPoly((1, 0, 1)))
    with pytest.raises(PolynomialDivisionByZero):
        try_exact_div(a, IntPoly.zero())


def test_division_by_non_monic_needs_integer_quotient():
    assert try_exact_div(IntPoly((1, 1)), IntPoly((2,))) is None
    assert poly_exact_div(IntPoly((2, 4)), IntPoly((2,))).coeffs == (1, 2)


def test_eval_and_palindrome():
    f = IntPoly((1, 3, 3, 1))
    assert eval_at(f, 1) == 8
    assert f(-1) == 0
    assert is_palindromic(f)
    assert is_palindromic(IntPoly((0, 1, 1)), degree=3)
    assert not is_palindromic(IntPoly((1, 2)))


def test_geometric_series():
    assert geometric_series(2, 3).coeffs == (1, 0, 1, 0, 1)
    assert str(GeomSeries(1, 3)) == "(1+z+z^2)"
    assert str(GeomSeries(3, 2)) == "(1+z^3)"
    with pytest.raises(InvalidInputError):
        geometric_series(1, 1)
    with pytest.raises(InvalidInputError):
        GeomSeries(0, 2)


@pytest.mark.parametrize("d", [1, 2, 3, 4, 6, 9, 12, 15, 30, 105])
def test_cyclotomic_matches_sympy(d):
    expected = Poly(cyclotomic_poly(d, z), z).all_coeffs()[::-1]
    assert cyclotomic(d).coeffs == tuple(int(c) for c in expected)


def test_cyclotomic_rejects_nonpositive():
    with pytest.raises(InvalidInputError):
        cyclotomic(0)


def test_is_kronecker_finds_multiset():
    f = cyclotomic(2) * cyclotomic(3) * cyclotomic(3) * cyclotomic(12)
    ok, multiset = is_kronecker(f)
    assert ok
    assert multiset.entries == ((2, 1), (3, 2), (12, 1))
    assert multiset.expand() == f
    assert str(multiset) == "Phi2 Phi3^2 Phi12"


def test_is_kronecker_with_phi1():
    f = cyclotomic(1) * cyclotomic(1) * cyclotomic(5)
    ok, multiset = is_kronecker(f)
    assert ok
    assert multiset.as_counts() == {1: 2, 5: 1}


def test_is_kronecker_constant_one():
    assert is_kronecker(IntPoly.one()) == (True, CyclotomicMultiset())


@pytest.mark.parametrize(
    "coeffs",
    [
        (1, 2, 1, 2, 1),  # palindromic, f(1) = 7
        (2, 1),  # constant term 2
        (1, 3, 1),  # coefficient too large
        (1, 1, 0, 1),  # not a palindrome
        (1, -1, 1, -1, 1, -1, 1, -1, 1, 1),
    ],
)
def test_is_kronecker_rejects(coeffs):
    assert is_kronecker(IntPoly(coeffs)) == (False, None)


def test_is_kronecker_zero_raises():
    with pytest.raises(ZeroPolynomialError):
        is_kronecker(IntPoly.zero())


def test_geometric_series_is_kronecker():
    ok, multiset = is_kronecker(geometric_series(2, 6))
    assert ok
    # 1 + z^2 + ... + z^10 = prod over d | 12, d does not divide 2
    assert multiset.as_counts() == {3: 1, 4: 1, 6: 1, 12: 1}


def test_multiset_merge_and_serialize():
    a = CyclotomicMultiset.from_counts({2: 1, 3: 1})
    b = CyclotomicMultiset.from_counts({3: 1, 0: 0})
    merged = a.merge(b)
    assert merged.entries == ((2, 1), (3, 2))
    assert merged.to_dict() == [{"d": 2, "mult": 1}, {"d": 3, "mult": 2}]
    assert merged.degree == 5


def test_cyclotomics_over_divisors_multiply_to_z_n_minus_one():
    for n in range(1, 201):
        expected = IntPoly((-1,) + (0,) * (n - 1) + (1,))
        assert prod((cyclotomic(d) for d in divisors(n)), start=IntPoly.one()) == expected, n


@pytest.mark.parametrize("coeffs", [(1, 2.5), (1, "2"), (None,), (1.0, 1)])
def test_coefficients_must_be_integers(coeffs):
    with pytest.raises(InvalidInputError):
        IntPoly(coeffs)


def test_numpy_integer_coefficients_are_accepted():
    poly = IntPoly((np.int64(3), np.int32(1)))
    assert poly == IntPoly((3, 1))
    assert all(type(c) is int for c in poly.coeffs)


@pytest.mark.parametrize(
    "data",
    [
        {"coeffs": "12"},
        {"coeffs": 5},
        {"coeffs": [1, 2.7]},
        {"coeffs": [True, 1]},
        {"degree": 2},
        [1, 2],
    ],
)
def test_from_dict_rejects_malformed(data):
    with pytest.raises(InvalidInputError):
        IntPoly.from_dict(data)


def test_from_dict_round_trip():
    assert IntPoly.from_dict({"coeffs": [1, 0, 2]}) == IntPoly((1, 0, 2))
