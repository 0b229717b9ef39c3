"""Claim catalog integrity and the verification engine.

verify_paper("quick") runs once here, end to end; the expensive full-scope
rows are exercised individually so a wrong expected value in any of them
still fails the suite without paying for the whole scope twice.
"""

import json

import pytest

from turan import (
    ClaimRecord,
    GraphError,
    evaluate_claim,
    load_catalog,
    verify_paper,
)

CATALOG = {rec.id: rec for rec in load_catalog()}

_OPS = {"construct", "count", "ex", "min_copies", "classify",
        "heuristic_min", "regular_graph", "skipped"}


def test_catalog_shape():
    records = load_catalog()
    assert len(records) == 73
    assert len(CATALOG) == len(records), "claim ids must be unique"
    for rec in records:
        assert rec.scope in ("quick", "full"), rec.id
        assert rec.op in _OPS, rec.id
        assert rec.provenance.strip(), rec.id
        assert isinstance(rec.params, dict), rec.id


def test_catalog_scope_split():
    quick = [r for r in load_catalog() if r.scope == "quick"]
    assert len(quick) == 60


def _verdict(claim_id):
    res = evaluate_claim(CATALOG[claim_id])
    assert res.verdict == "pass", (claim_id, res.detail)
    return res


def test_construct_row():
    res = _verdict("lemma7-attainer")
    assert res.computed == CATALOG["lemma7-attainer"].expected
    assert res.runtime_ms >= 0


def test_count_row():
    _verdict("thm2-attainer-count-g5")


def test_ex_row_with_formula_cross_check():
    # both routes agree, so the computed value collapses to the number
    res = _verdict("lemma8-ex-4-b2")
    assert res.computed == 4


def test_ex_row_route_disagreement_fails():
    # wire the formula to a different identity so the two routes split
    rec = ClaimRecord(
        id="inline-split", provenance="inline test", scope="quick", op="ex",
        params={"order": 5, "patterns": "c4",
                "formula": {"name": "star", "args": [5, 2]}},
        expected=6)
    res = evaluate_claim(rec)
    assert res.verdict == "fail"
    assert res.computed == {"exhaustive": 6, "formula": 2}


def test_min_copies_row():
    _verdict("fact4-min-5-7")


def test_classify_row_checks_isomorphism():
    res = _verdict("thm2-unique-small-p2")
    assert res.computed["matches_construction"] is True


def test_regular_graph_rows():
    res = _verdict("lemma6-regular-even-order")
    assert res.computed["hamiltonian"] is True
    refusal = _verdict("lemma6-parity-refusal")
    assert refusal.computed == {"error": "ParityError"}


def test_skipped_row():
    rec = CATALOG["thm5-min-lower-c4-12-skipped"]
    res = evaluate_claim(rec)
    assert res.verdict == "skipped"
    assert res.detail == rec.params["reason"]
    assert res.computed is None


def test_wrong_expected_value_fails_cleanly():
    rec = ClaimRecord(
        id="inline-wrong", provenance="inline test", scope="quick", op="ex",
        params={"order": 5, "patterns": "c4"}, expected=99)
    res = evaluate_claim(rec)
    assert res.verdict == "fail"
    assert "expected" in res.detail and "computed" in res.detail


def test_evaluation_error_becomes_fail_verdict():
    rec = ClaimRecord(
        id="inline-broken", provenance="inline test", scope="quick",
        op="construct", params={"construction": "no-such-graph"},
        expected={"order": 1})
    res = evaluate_claim(rec)
    assert res.verdict == "fail"
    assert res.detail.startswith("evaluation raised")


def test_quick_scope_verifies_clean():
    report = verify_paper("quick")
    assert report.scope == "quick"
    assert report.summary == {"pass": 60, "fail": 0, "skipped": 0}
    assert report.ok
    # the report serializes whole
    blob = json.dumps(report.as_dict())
    round_tripped = json.loads(blob)
    assert round_tripped["summary"]["pass"] == 60
    assert len(round_tripped["claims"]) == 60
    for row in round_tripped["claims"]:
        assert row["verdict"] == "pass", (row["id"], row["detail"])


def test_full_only_rows_evaluate_individually():
    # the cheap full-scope rows; the order-11..13 default-budget rows run
    # in the acceptance suite
    _verdict("thm5-ex-c4-10")
    _verdict("thm5-ex-lower-c4-11")
    res = evaluate_claim(CATALOG["thm5-ex-upper-c4-11-trusted"])
    assert res.verdict == "skipped"


def test_bad_scope_rejected():
    with pytest.raises(GraphError):
        verify_paper("everything")
