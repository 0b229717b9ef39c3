"""Exhaustive enumeration, Turán numbers, minimum copy counts.

The deep oracle sweeps (orders 7-8, the 10^4-sample suites) live in
test_acceptance.py; here the same machinery is checked against brute
force where a full labelled sweep takes under a second.
"""

import functools
from collections import Counter

import pytest

from turan import (
    GraphError,
    InfeasibleTaskError,
    Pattern,
    canonical_label,
    classify_record,
    classify_witnesses,
    count_classes,
    count_copies,
    enumerate_graphs,
    graph6_decode,
    min_copies,
    parse_pattern,
    single_pattern,
    turan_number,
    turan_value,
)
from oracles import all_labeled_graphs, count_copies_brute, min_copies_brute, turan_brute

# Unfiltered isomorphism-class totals by order; the order-7 and order-8
# entries are rechecked against a labelled sweep in the acceptance suite.
CLASS_TOTALS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


@functools.lru_cache(maxsize=None)
def _all_labels(n):
    return tuple(sorted({canonical_label(g) for g in all_labeled_graphs(n)}))


def _dedup_labeled(n, keep=None):
    if keep is None:
        return set(_all_labels(n))
    return {label for label in _all_labels(n) if keep(graph6_decode(label))}


def test_count_classes_totals():
    for n, want in CLASS_TOTALS.items():
        assert count_classes(n) == want


def test_enumeration_matches_labeled_dedup_to_order_6():
    for n in range(1, 7):
        got = sorted(canonical_label(g) for g in enumerate_graphs(n))
        assert len(got) == len(set(got)), "duplicate classes emitted"
        assert set(got) == _dedup_labeled(n)


def test_enumeration_size_histogram_order_6():
    by_size = Counter(g.size for g in enumerate_graphs(6))
    want = Counter()
    for label in _dedup_labeled(6):
        want[graph6_decode(label).size] += 1
    assert by_size == want


def test_enumeration_exact_size():
    want = {label for label in _dedup_labeled(6)
            if graph6_decode(label).size == 9}
    got = {canonical_label(g) for g in enumerate_graphs(6, exact_size=9)}
    assert got == want


def test_enumeration_max_size():
    got = {canonical_label(g) for g in enumerate_graphs(5, max_size=4)}
    want = {label for label in _dedup_labeled(5)
            if graph6_decode(label).size <= 4}
    assert got == want


def test_enumeration_with_filter_matches_predicate_sweep():
    c4 = single_pattern("c4")
    for n in (4, 5):
        got = {canonical_label(g) for g in enumerate_graphs(n, forbid="c4")}
        want = _dedup_labeled(n, keep=lambda g: count_copies_brute(g, c4.graph) == 0)
        assert got == want
    # order 4 has 8 C4-free classes: only K4, K4 minus an edge, and C4
    # itself contain the cycle
    assert count_classes(4, forbid="c4") == 8


def test_enumeration_filter_family():
    fam = "family:c3,p4,k13"
    pats = [p.graph for p in parse_pattern(fam)]
    got = {canonical_label(g) for g in enumerate_graphs(5, forbid=fam)}
    want = _dedup_labeled(
        5, keep=lambda g: all(count_copies_brute(g, h) == 0 for h in pats))
    assert got == want


def test_enumerated_graphs_are_pattern_free():
    b2 = single_pattern("b:2")
    for g in enumerate_graphs(6, forbid="b:2"):
        assert count_copies(g, b2).value == 0


def test_turan_number_against_brute_force():
    cases = [(4, "c4"), (5, "c4"), (5, "k:3"), (5, "s:3"), (5, "b:2"),
             (4, "p:4"), (5, "family:c3,p4,k13")]
    for n, spec in cases:
        res = turan_number(n, spec)
        want_value, _ = turan_brute(n, res.patterns)
        assert res.ex_value == want_value, (n, spec)
        # every extremal witness is pattern-free, at the extremal size,
        # and adding any edge to it creates a copy
        for label in res.extremal:
            g = graph6_decode(label)
            assert g.size == want_value
            assert all(count_copies_brute(g, h.graph) == 0 for h in res.patterns)


def test_turan_witnesses_are_exactly_the_extremal_classes():
    res = turan_number(5, "k:3")
    assert res.ex_value == 6  # bipartite bound at order 5
    want = _dedup_labeled(
        5, keep=lambda g: g.size == 6
        and count_copies_brute(g, Pattern.triangle().graph) == 0)
    assert set(res.extremal) == want
    assert len(res.extremal) == 1  # the complete bipartite 2+3 split


def test_turan_value_known_row():
    assert turan_value(6, "c4") == 7
    assert turan_value(6, "b:2") == 9
    assert turan_value(6, "s:3") == 6


def test_min_copies_against_brute_force():
    cases = [(5, 7, "c4"), (5, 8, "s:4"), (5, 9, "b:3"), (6, 7, "s:3"),
             (5, 4, "k:3"), (6, 12, "b:2")]
    for n, e, spec in cases:
        pat = single_pattern(spec)
        res = min_copies(n, e, spec)
        assert res.min_copies == min_copies_brute(n, e, pat), (n, e, spec)
        want = _dedup_labeled(
            n, keep=lambda g: g.size == e
            and count_copies_brute(g, pat.graph) == res.min_copies)
        assert set(res.witnesses) == want


def test_min_copies_witnesses_are_canonical_labels():
    res = min_copies(6, 8, "c4")
    for label in res.witnesses:
        assert canonical_label(graph6_decode(label)) == label


def test_min_copies_zero_when_below_turan():
    res = min_copies(6, 7, "c4")
    assert res.min_copies == 0


def test_classify_matches_brute_force():
    pat = single_pattern("c4")
    for copies in (0, 1, 2):
        rec = classify_record(5, 6, "c4", copies)
        want = _dedup_labeled(
            5, keep=lambda g: g.size == 6
            and count_copies_brute(g, pat.graph) == copies)
        assert set(rec.witnesses) == want, copies


def test_classify_witnesses_decodes():
    pat = single_pattern("b:2")
    graphs = classify_witnesses(6, 10, "b:2", 2)
    assert graphs
    for g in graphs:
        assert (g.n, g.size) == (6, 10)
        assert count_copies(g, pat).value == 2


def test_complement_mode_matches_brute_force():
    # size above half the complete size routes through complement leaves
    pat = single_pattern("b:3")
    res = min_copies(6, 13, "b:3")
    assert res.min_copies == min_copies_brute(6, 13, pat)
    want = _dedup_labeled(
        6, keep=lambda g: g.size == 13
        and count_copies_brute(g, pat.graph) == res.min_copies)
    assert set(res.witnesses) == want
    rec = classify_record(6, 13, "b:3", res.min_copies)
    assert set(rec.witnesses) == want


def test_jobs_determinism():
    serial = turan_number(7, "c4")
    forked = turan_number(7, "c4", jobs=2)
    assert (serial.ex_value, serial.extremal, serial.classes_visited) == \
           (forked.ex_value, forked.extremal, forked.classes_visited)
    s2 = min_copies(7, 11, "s:4")
    f2 = min_copies(7, 11, "s:4", jobs=2)
    assert (s2.min_copies, s2.witnesses) == (f2.min_copies, f2.witnesses)


def test_envelope_refusals():
    with pytest.raises(InfeasibleTaskError) as err:
        turan_number(11, "c4")
    assert "allow_long" in str(err.value)
    with pytest.raises(InfeasibleTaskError) as err:
        turan_number(12, "c4")
    assert "force" in str(err.value)
    with pytest.raises(InfeasibleTaskError):
        min_copies(14, 40, "c4")
    with pytest.raises(InfeasibleTaskError):
        enumerate_graphs(11).__next__()


def test_envelope_frees_shallow_complements():
    # 14 vertices but only 3 edges missing from complete: complement depth 3
    res = min_copies(14, 88, "k:3")
    assert res.min_copies > 0
    assert res.size == 88


def test_unfiltered_envelope_is_tighter():
    # without any pruning the free boundary sits one order lower
    with pytest.raises(InfeasibleTaskError):
        count_classes(10)


def test_input_validation():
    with pytest.raises(GraphError):
        turan_number(0, "c4")
    with pytest.raises(GraphError):
        min_copies(5, 11, "c4")  # size above complete
    with pytest.raises(GraphError):
        min_copies(5, -1, "c4")
    with pytest.raises(GraphError):
        classify_record(5, 6, "c4", -1)
    with pytest.raises(GraphError):
        min_copies(6, 7, "family:c3,p4,k13")  # single pattern only


def test_result_metadata():
    res = turan_number(5, "c4")
    assert res.method == "exhaustive"
    assert res.runtime_ms >= 0
    assert res.classes_visited > 0
    res2 = min_copies(5, 7, "c4")
    assert res2.method == "exhaustive"
