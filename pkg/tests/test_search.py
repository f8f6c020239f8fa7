from itertools import product

import pytest

from hstar_kronecker.errors import InvalidInputError, NotRMultiplicityError
from hstar_kronecker.explorer import (
    CSV_COLUMNS,
    analyze_q,
    coprime_triples,
    diff_table1,
    find_kronecker_without_geomfact,
    search_r_multiplicities,
    search_three_support,
    search_two_support,
)
from hstar_kronecker.simplex import SupportedQ, hstar, is_reflexive

EXCEPTIONAL_Q = SupportedQ((2, 5), (7, 5))


def brute_force_multiplicities(r, x_max):
    return [
        SupportedQ(r, x)
        for x in product(range(1, x_max + 1), repeat=len(r))
        if is_reflexive(SupportedQ(r, x))
    ]


def test_analyze_exceptional_instance():
    rec = analyze_q(EXCEPTIONAL_Q)
    assert rec.reflexive
    assert rec.ell == 4
    assert rec.kronecker
    assert rec.geom_fact_g is None
    assert rec.geom_fact_hstar is not None
    assert rec.geom_fact_hstar.expand() == hstar(EXCEPTIONAL_Q)
    assert rec.cyclotomics.expand() == hstar(EXCEPTIONAL_Q)
    assert rec.family_tag == "exceptional"


def test_analyze_family_instance():
    rec = analyze_q(SupportedQ((2, 3), (1, 3)))
    assert rec.family_tag == "case1"
    assert str(rec.geom_fact_g) == "(1+z)(1+z+z^2)"
    assert rec.geom_fact_hstar.pairs() == [(1, 2), (1, 2), (1, 3)]


def test_analyze_non_kronecker_instance():
    # q = (2, 2, 5): h* = 1 + 4z + 4z^2 + z^3
    rec = analyze_q(SupportedQ((2, 5), (2, 1)))
    assert not rec.kronecker
    assert rec.cyclotomics is None
    assert rec.geom_fact_g is None and rec.geom_fact_hstar is None
    assert rec.family_tag == "none"


def test_analyze_requires_reflexive():
    with pytest.raises(NotRMultiplicityError):
        analyze_q(SupportedQ((2, 5), (1, 1)))


def test_record_serialization():
    rec = analyze_q(EXCEPTIONAL_Q)
    row = rec.csv_row()
    assert list(row) == CSV_COLUMNS
    assert row["r"] == "(2,5)"
    assert row["x"] == "(7,5)"
    assert row["g_factorization"] == ""
    data = rec.to_dict()
    assert data["s"] == [5, 2]
    assert data["g_factorization"] is None
    assert data["family_tag"] == "exceptional"


@pytest.mark.parametrize("r", [(2, 5), (1, 4), (3, 4), (4, 6), (6, 10, 15), (3, 4, 5)])
def test_search_r_multiplicities_matches_brute_force(r):
    assert search_r_multiplicities(r, 12) == brute_force_multiplicities(r, 12)


def test_search_r_multiplicities_rejects_bad_support():
    with pytest.raises(InvalidInputError):
        search_r_multiplicities((5, 2), 10)
    with pytest.raises(InvalidInputError):
        search_r_multiplicities((), 10)
    assert search_r_multiplicities((2, 5), 0) == []


def test_two_support_search_is_sorted_and_complete():
    records = search_two_support(6, 10, workers=1)
    keys = [rec.key() for rec in records]
    assert keys == sorted(keys)
    expected = [
        q
        for r1 in range(1, 7)
        for r2 in range(r1 + 1, 7)
        for q in brute_force_multiplicities((r1, r2), 10)
    ]
    assert sorted(rec.q.key() for rec in records) == sorted(q.key() for q in expected)
    exceptional = [(rec.q.r, rec.q.x) for rec in records if rec.family_tag == "exceptional"]
    assert exceptional == [((2, 5), (7, 5)), ((4, 5), (6, 7)), ((5, 6), (7, 9))]


def test_two_support_search_same_for_any_worker_count():
    assert search_two_support(5, 8, workers=1) == search_two_support(5, 8, workers=2)


def test_two_support_search_rejects_bad_bounds():
    with pytest.raises(InvalidInputError):
        search_two_support(1, 10)
    with pytest.raises(InvalidInputError):
        search_two_support(5, 0)


def test_coprime_triples():
    assert coprime_triples(7) == [
        (2, 3, 5),
        (2, 3, 7),
        (2, 5, 7),
        (3, 4, 5),
        (3, 4, 7),
        (3, 5, 7),
        (4, 5, 7),
        (5, 6, 7),
    ]


def test_three_support_search_finds_532_family():
    records = search_three_support(5, 8, workers=1)
    assert records
    assert all(rec.kronecker for rec in records)
    assert {rec.q.s for rec in records} <= {(5, 3, 2), (5, 4, 3)}
    tags = {rec.q.x: rec.family_tag for rec in records if rec.q.r == (6, 10, 15)}
    assert tags[(4, 8, 3)] == "s532-1"


@pytest.mark.slow
def test_kronecker_without_geometric_factorization():
    records = find_kronecker_without_geomfact(10, 30)
    assert [(rec.q.r, rec.q.x) for rec in records] == [((5, 7), (25, 7))]


@pytest.mark.slow
def test_table1_at_desk_scale():
    records = search_two_support(20, 60)
    diff = diff_table1(records, 20, 60)
    assert diff.ok, diff.to_dict()
    assert len(diff.matched) == 23
