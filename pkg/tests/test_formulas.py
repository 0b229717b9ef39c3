"""Closed-form sizes against the exhaustive search and the constructions.

Each formula is exercised over its whole small-order domain, so a wrong
branch in any parity case shows up here rather than in the acceptance
sweep (which rechecks the same identities one order higher).
"""

import pytest

from turan import (
    C4_TRUSTED_ORDERS,
    ClaimRecord,
    GraphError,
    bounded_degree_max,
    ex_book,
    ex_c4_table,
    ex_family_fact1,
    ex_star,
    max_size_bounded_degree,
    turan_value,
)


def test_bounded_degree_formula_matches_construction():
    for n in range(2, 12):
        for d in range(1, n):
            g = bounded_degree_max(n, d)
            assert g.size == max_size_bounded_degree(n, d), (n, d)
            assert max(g.degree(v) for v in range(n)) <= d
            # both odd drops exactly one half edge
            if n % 2 and d % 2:
                assert max_size_bounded_degree(n, d) == (n * d - 1) // 2
            else:
                assert max_size_bounded_degree(n, d) == n * d // 2


def test_bounded_degree_rejects_bad_args():
    with pytest.raises(GraphError):
        max_size_bounded_degree(5, 0)
    with pytest.raises(GraphError):
        max_size_bounded_degree(5, 5)


def test_ex_star_matches_exhaustive_search():
    for n in range(3, 8):
        for p in range(2, n):
            assert ex_star(n, p) == turan_value(n, f"s:{p}"), (n, p)


def test_ex_star_is_the_degree_formula():
    for n in range(3, 12):
        for p in range(2, n):
            assert ex_star(n, p) == max_size_bounded_degree(n, p - 1)


def test_ex_star_rejects_bad_args():
    with pytest.raises(GraphError):
        ex_star(5, 1)
    with pytest.raises(GraphError):
        ex_star(5, 5)


def test_ex_book_matches_exhaustive_search():
    for p in range(2, 5):
        for n in (p + 2, p + 3):
            assert ex_book(n, p) == turan_value(n, f"b:{p}"), (n, p)


def test_ex_book_closed_forms():
    # even p: p(p+2)/2 then p(p+4)/2; odd p: (p+1)^2/2 then (p+1)(p+3)/2
    assert ex_book(4, 2) == 4
    assert ex_book(5, 2) == 6
    assert ex_book(5, 3) == 8
    assert ex_book(6, 3) == 12
    assert ex_book(6, 4) == 12
    assert ex_book(7, 4) == 16
    assert ex_book(7, 5) == 18
    assert ex_book(8, 5) == 24
    assert ex_book(8, 6) == 24
    assert ex_book(9, 6) == 30


def test_ex_book_defined_only_just_above_the_book():
    with pytest.raises(GraphError):
        ex_book(7, 2)  # n = p + 5
    with pytest.raises(GraphError):
        ex_book(3, 2)  # smaller than the book itself
    with pytest.raises(GraphError):
        ex_book(3, 1)


def test_ex_c4_table_matches_exhaustive_search():
    for n in range(6, 9):
        assert ex_c4_table(n) == turan_value(n, "c4")


def test_ex_c4_table_values_and_bounds():
    assert [ex_c4_table(n) for n in range(6, 14)] == [7, 9, 11, 13, 16, 18, 21, 24]
    assert C4_TRUSTED_ORDERS == frozenset({12, 13})
    with pytest.raises(GraphError):
        ex_c4_table(5)
    with pytest.raises(GraphError):
        ex_c4_table(14)


def test_ex_family_fact1_frozen_values():
    assert [ex_family_fact1(n) for n in range(1, 10)] == [0, 1, 2, 2, 3, 4, 4, 5, 6]
    with pytest.raises(GraphError):
        ex_family_fact1(0)


def test_ex_family_fact1_matches_exhaustive_search():
    for n in range(3, 7):
        assert ex_family_fact1(n) == turan_value(n, "family:c3,p4,k13")


def test_claim_record_statement():
    rec = ClaimRecord(
        id="demo", scope="quick", provenance="demo", op="ex",
        params={"order": 6, "pattern": "b:2"}, expected=9, note="")
    assert rec.statement == "ex(order=6, pattern='b:2') == 9"
