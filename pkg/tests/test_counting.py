"""Copy counters: frozen anchors, brute-force agreement, dual-route checks."""

import random

import pytest

from turan import (
    Graph,
    GraphError,
    Pattern,
    book,
    complete,
    contains,
    contains_any,
    count_book,
    count_c4,
    count_copies,
    count_generic,
    count_star,
    count_triangles,
    cycle,
    parse_pattern,
    path,
    single_pattern,
    star,
)
from turan.counting import pattern_kernel_args
from turan import kernels
from conftest import random_graph
from oracles import count_copies_brute

_PATTERNS = [Pattern.star(2), Pattern.star(3), Pattern.star(4),
             Pattern.book(2), Pattern.book(3), Pattern.c4(),
             Pattern.triangle(), Pattern.path(4), Pattern.complete(4)]


def test_frozen_counter_anchors():
    assert count_star(star(3), 2) == 3
    assert count_star(cycle(5), 2) == 5
    assert count_star(complete(4), 3) == 4
    assert count_c4(cycle(4)) == 1
    assert count_c4(complete(4)) == 3
    assert count_c4(complete(5)) == 15
    assert count_triangles(complete(4)) == 4
    assert count_book(book(3), 3) == 1
    assert count_generic(cycle(4), Pattern.path(4)) == 4
    assert count_generic(complete(4), Pattern.complete(4)) == 1


def test_book_in_bigger_book():
    # p+1 pages contain exactly p+1 books with p pages: drop any one page.
    for p in range(2, 6):
        assert count_book(book(p + 1), p) == p + 1


def test_counters_match_brute_force():
    rng = random.Random(97)
    for _ in range(150):
        g = random_graph(rng, rng.randint(3, 7), rng.random())
        for pat in _PATTERNS:
            assert count_copies(g, pat).value == count_copies_brute(g, pat.graph), (
                g.edges(), pat.name)


def test_closed_forms_match_generic_route():
    rng = random.Random(101)
    for _ in range(400):
        g = random_graph(rng, rng.randint(4, 9), rng.random())
        for pat in _PATTERNS:
            cc = count_copies(g, pat)
            assert cc.value == count_generic(g, pat), (g.edges(), pat.name)
            want = "generic" if pat.kind == "generic" else "closed-form"
            assert cc.method == want


def test_kernel_counter_matches_python_route():
    # the (code, param, ...) form drives the search and annealing kernels
    rng = random.Random(103)
    for _ in range(200):
        g = random_graph(rng, rng.randint(4, 9), rng.random())
        for pat in _PATTERNS:
            code, param, hrows, hn, horder, haut = pattern_kernel_args(pat)
            got = int(kernels.count_pattern(g.rows, g.n, code, param,
                                            hrows, hn, horder, haut))
            assert got == count_copies(g, pat).value, (g.edges(), pat.name)


def test_monotone_under_edge_addition():
    rng = random.Random(107)
    for _ in range(30):
        n = rng.randint(4, 9)
        g = Graph.from_edges(n, [])
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        prev = {pat.name: 0 for pat in _PATTERNS}
        for u, v in pairs:
            g = g.with_edge(u, v)
            for pat in _PATTERNS:
                cur = count_copies(g, pat).value
                assert cur >= prev[pat.name]
                prev[pat.name] = cur


def test_contains_agrees_with_counts():
    rng = random.Random(109)
    for _ in range(100):
        g = random_graph(rng, rng.randint(3, 8), rng.random())
        for pat in _PATTERNS:
            assert contains(g, pat) == (count_copies(g, pat).value > 0)
        some = [Pattern.c4(), Pattern.triangle(), Pattern.path(4)]
        assert contains_any(g, some) == any(contains(g, p) for p in some)


def test_counter_validation_errors():
    with pytest.raises(GraphError):
        count_star(cycle(4), 1)
    with pytest.raises(GraphError):
        count_book(cycle(4), 1)


def test_count_generic_early_exit():
    assert count_generic(path(3), Pattern.complete(4)) == 0  # pattern larger
    assert count_generic(complete(3), Pattern.book(2)) == 0  # more edges


def test_parse_pattern_language():
    assert [p.name for p in parse_pattern("c4")] == ["c4"]
    assert [p.name for p in parse_pattern("s:3")] == ["s:3"]
    assert [p.name for p in parse_pattern("family:c3,p4,k13")] == [
        "k:3", "p:4", "s:3"]
    assert [p.name for p in parse_pattern("family:k3,p:4,s:3")] == [
        "k:3", "p:4", "s:3"]
    with pytest.raises(GraphError):
        parse_pattern("k13")  # aliases only resolve inside family lists
    with pytest.raises(GraphError):
        parse_pattern("q:4")
    with pytest.raises(GraphError):
        parse_pattern("s:1")
    with pytest.raises(GraphError):
        parse_pattern("family:")


def test_single_pattern_rejects_family():
    assert single_pattern("b:4").name == "b:4"
    with pytest.raises(GraphError):
        single_pattern("family:c3,p4,k13")
