import random
from itertools import combinations
from math import gcd, lcm

import pytest

from hstar_kronecker.errors import (
    EmptyInputError,
    InconsistentResiduesError,
    InvalidInputError,
    InvalidParametersError,
    LengthMismatchError,
    NotDesirableError,
    NotReflexiveError,
    NotRMultiplicityError,
    QSpecSyntaxError,
)
from hstar_kronecker.explorer import is_single_series, search_r_multiplicities
from hstar_kronecker.polyring import IntPoly, geometric_series
from hstar_kronecker.simplex import (
    SDivision,
    SupportedQ,
    all_desirable_divisions,
    crt_alpha,
    crt_alpha_pairwise_coprime,
    crt_indices,
    desirable_division,
    ell,
    extend_by_lcm,
    format_qspec,
    free_sum,
    g_poly,
    g_poly_via_crt,
    g_two_support_fast,
    hibi_reflexive,
    hstar,
    interior_point_count,
    is_r_multiplicity,
    is_reflexive,
    omega,
    parse_qspec,
    support,
    two_support_q,
)

EXCEPTIONAL_Q = SupportedQ((2, 5), (7, 5))
EXCEPTIONAL_HSTAR = (1, 1, 2, 4, 4, 5, 6, 5, 4, 4, 2, 1, 1)
EXCEPTIONAL_G = (1, 0, 1, 2, 1, 1, 2, 1, 0, 1)


def reflexive_two_support(r_max: int, x_max: int):
    for r1 in range(1, r_max + 1):
        for r2 in range(r1 + 1, r_max + 1):
            for x1 in range(1, x_max + 1):
                for x2 in range(1, x_max + 1):
                    q = SupportedQ((r1, r2), (x1, x2))
                    if is_reflexive(q):
                        yield q


def sampled_reflexive(rng: random.Random, d: int, count: int, lcm_max: int = 120, x_max: int = 20):
    """Random reflexive q on d-element supports with lcm(r) <= lcm_max."""
    pools = {r: search_r_multiplicities(r, x_max) for r in combinations(range(1, 13), d) if lcm(*r) <= lcm_max}
    supports = sorted(r for r, qs in pools.items() if qs)
    return [rng.choice(pools[rng.choice(supports)]) for _ in range(count)]


# =============================================================================
# Q-vectors
# =============================================================================


def test_supported_q_sorts_pairs():
    q = SupportedQ((5, 2), (5, 7))
    assert q.r == (2, 5)
    assert q.x == (7, 5)
    assert q.lcm_r == 10
    assert q.s == (5, 2)
    assert q.n == 12
    assert q.qsum == 39


@pytest.mark.parametrize(
    "r, x, error",
    [
        ((), (), EmptyInputError),
        ((2, 5), (1,), LengthMismatchError),
        ((0, 5), (1, 1), InvalidInputError),
        ((2, 2), (1, 1), InvalidInputError),
        ((2, 5), (0, 1), InvalidInputError),
    ],
)
def test_supported_q_rejects(r, x, error):
    with pytest.raises(error):
        SupportedQ(r, x)


@pytest.mark.parametrize(
    "text",
    ["2^7,5^5", "5^5, 2^7", "2,2,2,2,2,2,2,5,5,5,5,5", "2^3,5^5,2^4", '{"r": [2, 5], "x": [7, 5]}'],
)
def test_parse_qspec_forms(text):
    assert parse_qspec(text) == EXCEPTIONAL_Q


@pytest.mark.parametrize("text", ["2^", "a^3", "2^0", "0^3", "2;5", "{bad json"])
def test_parse_qspec_rejects_malformed(text):
    with pytest.raises(QSpecSyntaxError):
        parse_qspec(text)


def test_parse_qspec_empty():
    with pytest.raises(EmptyInputError):
        parse_qspec("  ")


@pytest.mark.parametrize(
    "text",
    [
        '{"r": [2.9, 5], "x": [7, 5]}',
        '{"r": "25", "x": "75"}',
        '{"r": null, "x": [1]}',
        '{"r": [2, 5], "x": [7, true]}',
        '{"r": [2, 5]}',
        "{}",
    ],
)
def test_parse_qspec_rejects_malformed_json(text):
    with pytest.raises(QSpecSyntaxError):
        parse_qspec(text)


@pytest.mark.parametrize("data", [[2, 5], "2^7,5^5", {"r": 25, "x": 75}])
def test_from_dict_rejects_non_objects_and_scalars(data):
    with pytest.raises(QSpecSyntaxError):
        SupportedQ.from_dict(data)


@pytest.mark.parametrize("r, x", [((2.9, 5), (7, 5)), ((2, 5), (7.0, 5)), (("2", 5), (7, 5))])
def test_supported_q_rejects_non_integers(r, x):
    with pytest.raises(InvalidInputError):
        SupportedQ(r, x)


def test_format_and_support():
    assert format_qspec(EXCEPTIONAL_Q) == "2^7,5^5"
    assert str(EXCEPTIONAL_Q) == "2^7,5^5"
    assert support([5, 2, 5]) == SupportedQ((2, 5), (1, 2))
    assert EXCEPTIONAL_Q.to_q() == (2,) * 7 + (5,) * 5
    assert SupportedQ.from_dict(EXCEPTIONAL_Q.to_dict()) == EXCEPTIONAL_Q


def test_reflexivity_and_ell():
    assert is_reflexive(EXCEPTIONAL_Q)
    assert is_r_multiplicity((2, 5), (7, 5))
    assert ell(EXCEPTIONAL_Q) == 4
    q = SupportedQ((2, 5), (1, 1))
    assert not is_reflexive(q)
    with pytest.raises(NotRMultiplicityError):
        ell(q)
    with pytest.raises(LengthMismatchError):
        is_r_multiplicity((2, 5), (1,))


def test_desirable_division():
    div = desirable_division(EXCEPTIONAL_Q)
    assert div == SDivision((2, 2), (-3, 1), True)
    assert div.is_division_of(EXCEPTIONAL_Q)


def test_all_desirable_divisions():
    divisions = all_desirable_divisions(EXCEPTIONAL_Q)
    assert [(d.c, d.rho) for d in divisions] == [((2, 2), (-3, 1)), ((1, 3), (2, -1))]
    assert all(d.desirable for d in divisions)


def test_desirable_division_three_support():
    q = SupportedQ((6, 10, 15), (4, 8, 3))
    assert q.s == (5, 3, 2)
    div = desirable_division(q)
    assert div.rho == (-1, -1, 1)
    assert div.c == (1, 3, 1)
    assert sum(div.c) == ell(q) == 5


@pytest.mark.parametrize("k", [1, 2, 5, 9])
def test_desirable_division_of_single_support(k):
    div = desirable_division(SupportedQ((1,), (k,)))
    assert div.c == (k + 1,)
    assert div.rho == (-1,)


def test_desirable_division_parts_sum_to_ell():
    qs = list(reflexive_two_support(8, 12)) + sampled_reflexive(random.Random(3), 3, 200)
    for q in qs:
        for div in all_desirable_divisions(q):
            assert sum(div.c) == ell(q), (q, div)


def test_r_multiplicity_forces_coprime_support():
    supports = [r for d in (2, 3) for r in combinations(range(1, 11), d)]
    for r in supports:
        for x in ((x1, x2) for x1 in range(1, 9) for x2 in range(1, 9)):
            x = x + (1,) * (len(r) - 2)
            if not is_r_multiplicity(r, x):
                continue
            q = SupportedQ(r, x)
            assert gcd(*r) == 1, q
            assert lcm(*q.s) == q.lcm_r, q


def test_hibi_palindrome_matches_reflexivity():
    for r1 in range(1, 8):
        for r2 in range(r1 + 1, 8):
            for x1 in range(1, 11):
                for x2 in range(1, 11):
                    q = SupportedQ((r1, r2), (x1, x2))
                    assert hibi_reflexive(q) == is_reflexive(q), q
    for r in combinations(range(1, 7), 3):
        for x in ((1, 1, 1), (2, 3, 1), (1, 4, 3), (5, 1, 2)):
            q = SupportedQ(r, x)
            assert hibi_reflexive(q) == is_reflexive(q), q


def test_hstar_is_one_series_only_for_support_one():
    for k in range(1, 12):
        assert hstar(SupportedQ((1,), (k,))) == geometric_series(1, k + 1)
    qs = list(reflexive_two_support(6, 10)) + sampled_reflexive(random.Random(5), 3, 100)
    for q in qs:
        assert not is_single_series(hstar(q)), q


def test_sdivision_of_checks_congruence():
    assert not SDivision.of(EXCEPTIONAL_Q, (2, 1)).desirable
    with pytest.raises(InvalidInputError):
        SDivision.of(EXCEPTIONAL_Q, (1, 1))


# =============================================================================
# h* and g
# =============================================================================


def test_exceptional_hstar_and_g():
    assert hstar(EXCEPTIONAL_Q).coeffs == EXCEPTIONAL_HSTAR
    assert g_poly(EXCEPTIONAL_Q).coeffs == EXCEPTIONAL_G


def test_hstar_small():
    # q = (2, 3, 3, 3)
    assert hstar(SupportedQ((2, 3), (1, 3))).coeffs == (1, 3, 4, 3, 1)
    assert g_poly(SupportedQ((2, 3), (1, 3))).coeffs == (1, 2, 2, 1)


def test_hstar_of_non_reflexive_q():
    q = SupportedQ((2, 5), (1, 1))
    h = hstar(q)
    assert h(1) == 1 + q.qsum
    assert not hibi_reflexive(q)


def test_hstar_is_ell_series_times_g():
    for q in reflexive_two_support(7, 12):
        length = ell(q)
        series = geometric_series(1, length) if length > 1 else IntPoly.one()
        assert hstar(q) == series * g_poly(q), q


def test_hibi_and_interior_points():
    assert hibi_reflexive(EXCEPTIONAL_Q)
    assert interior_point_count(EXCEPTIONAL_Q) == 1
    assert interior_point_count(SupportedQ((2, 5), (1, 1))) == 3


def test_g_poly_requires_reflexive():
    with pytest.raises(NotRMultiplicityError):
        g_poly(SupportedQ((2, 5), (1, 1)))


# =============================================================================
# Generalized CRT
# =============================================================================


def test_crt_alpha():
    assert crt_alpha((4, 6), (1, 3)) == 9
    assert crt_alpha((5, 2), (3, 1)) == 3
    with pytest.raises(InconsistentResiduesError):
        crt_alpha((4, 6), (0, 1))
    with pytest.raises(InvalidInputError):
        crt_alpha((4, 6), (4, 0))
    with pytest.raises(LengthMismatchError):
        crt_alpha((4, 6), (1,))


def test_crt_alpha_pairwise_coprime():
    assert crt_alpha_pairwise_coprime((3, 5), (2, 4)) == 14
    assert crt_alpha_pairwise_coprime((1, 7), (0, 3)) == 3
    with pytest.raises(InvalidInputError):
        crt_alpha_pairwise_coprime((4, 6), (1, 3))


def test_crt_forms_agree_for_coprime_moduli():
    s = (3, 4, 5)
    for i in crt_indices(s):
        assert crt_alpha(s, i) == crt_alpha_pairwise_coprime(s, i)


def test_crt_indices_are_compatible_and_complete():
    s = (4, 6, 10)
    indices = list(crt_indices(s))
    assert len(indices) == 60
    assert sorted({crt_alpha(s, i) for i in indices}) == list(range(60))
    assert list(crt_indices((2, 4))) == [(0, 0), (0, 2), (1, 1), (1, 3)]
    for i in indices:
        assert all((i[j] - i[k]) % gcd(s[j], s[k]) == 0 for j in range(3) for k in range(3))


def test_omega_digits():
    assert omega(EXCEPTIONAL_Q, (3, 1)) == (0, 1)
    assert omega(EXCEPTIONAL_Q, (4, 1)) == (1, 4)


def test_g_via_crt_matches_direct_g():
    for div in all_desirable_divisions(EXCEPTIONAL_Q):
        assert g_poly_via_crt(EXCEPTIONAL_Q, div).coeffs == EXCEPTIONAL_G


def test_g_via_crt_rejects_undesirable_division():
    with pytest.raises(NotDesirableError):
        g_poly_via_crt(EXCEPTIONAL_Q, SDivision.of(EXCEPTIONAL_Q, (2, 1)))


def test_g_via_crt_agrees_on_every_desirable_division():
    for q in reflexive_two_support(6, 8):
        g = g_poly(q)
        for div in all_desirable_divisions(q):
            assert g_poly_via_crt(q, div) == g, (q, div)


def test_g_via_crt_three_support():
    q = SupportedQ((2, 3, 5), (1, 4, 3))
    assert is_reflexive(q)
    assert g_poly_via_crt(q, desirable_division(q)) == g_poly(q)


def test_g_via_crt_on_sampled_supports():
    rng = random.Random(20240601)
    qs = sampled_reflexive(rng, 2, 600) + sampled_reflexive(rng, 3, 400)
    assert sum(q.d == 3 for q in qs) == 400
    for q in qs:
        g = g_poly(q)
        divisions = all_desirable_divisions(q)
        assert divisions, q
        for div in divisions:
            assert g_poly_via_crt(q, div) == g, (q, div)


# =============================================================================
# r = (a, ka - 1)
# =============================================================================


def test_two_support_q_layout():
    q = two_support_q(2, 2, 1, 1)
    assert q == SupportedQ((2, 3), (1, 3))
    assert is_reflexive(q)
    with pytest.raises(InvalidParametersError):
        two_support_q(2, 1, 1, 0)
    with pytest.raises(InvalidParametersError):
        two_support_q(1, 2, 1, 1)


@pytest.mark.parametrize("a", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_g_two_support_fast_matches_enumeration(a, k):
    for c1 in range(1, 7):
        for c2 in range(0, 7):
            try:
                q = two_support_q(a, k, c1, c2)
            except InvalidParametersError:
                continue
            assert g_two_support_fast(a, k, c1, c2) == g_poly(q), (a, k, c1, c2)


# =============================================================================
# Constructions
# =============================================================================


def test_extend_by_lcm_keeps_g():
    extended = extend_by_lcm(EXCEPTIONAL_Q, 2)
    assert extended == SupportedQ((2, 5, 10), (7, 5, 2))
    assert ell(extended) == 6
    assert g_poly(extended) == g_poly(EXCEPTIONAL_Q)


def test_extend_by_lcm_merges_existing_entry():
    q = SupportedQ((1, 2), (1, 1))
    assert extend_by_lcm(q, 3) == SupportedQ((1, 2), (1, 4))
    with pytest.raises(InvalidInputError):
        extend_by_lcm(q, 0)


@pytest.mark.parametrize(
    "p, q",
    [
        (SupportedQ((1,), (1,)), SupportedQ((1,), (1,))),
        (SupportedQ((1,), (1,)), SupportedQ((1, 2), (1, 1))),
        (SupportedQ((1, 2), (1, 1)), SupportedQ((1,), (1,))),
    ],
)
def test_free_sum_multiplies_hstar(p, q):
    assert hstar(free_sum(p, q)) == hstar(p) * hstar(q)


def test_free_sum_layout_and_errors():
    assert free_sum(SupportedQ((1,), (1,)), SupportedQ((1, 2), (1, 1))) == SupportedQ((1, 2, 4), (1, 1, 1))
    with pytest.raises(NotReflexiveError):
        free_sum(SupportedQ((2, 5), (1, 1)), SupportedQ((1,), (1,)))
