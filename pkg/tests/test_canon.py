"""Canonical labelling, isomorphism, automorphisms, patterns."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from turan import (
    Graph,
    GraphError,
    Pattern,
    are_isomorphic,
    automorphism_count,
    book,
    canonical_form,
    canonical_label,
    complete,
    cycle,
    graph6_decode,
    path,
    star,
)
from conftest import random_graph, random_permutation_of
from oracles import automorphisms_brute, iso_brute


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 10), st.randoms(use_true_random=False))
def test_canonical_label_relabeling_invariant(n, rng):
    g = random_graph(rng, n, rng.random())
    assert canonical_label(random_permutation_of(rng, g)) == canonical_label(g)


def test_canonical_form_is_isomorphic_fixed_point():
    rng = random.Random(11)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 9), 0.5)
        c = canonical_form(g)
        assert are_isomorphic(g, c)
        assert canonical_label(c) == canonical_label(g)
        # encoding the canonical form reproduces the label itself
        from turan import graph6_encode
        assert graph6_encode(c) == canonical_label(g)


def test_are_isomorphic_agrees_with_brute_force():
    rng = random.Random(23)
    pool = [random_graph(rng, 5, p) for p in (0.2, 0.4, 0.6, 0.8) for _ in range(6)]
    pool += [cycle(5), path(5), star(4), complete(5)]
    for a, b in itertools.combinations(pool, 2):
        assert are_isomorphic(a, b) == iso_brute(a, b)


def test_label_equality_iff_isomorphic():
    rng = random.Random(37)
    pool = [random_graph(rng, 6, 0.5) for _ in range(40)]
    for a, b in itertools.combinations(pool, 2):
        assert (canonical_label(a) == canonical_label(b)) == are_isomorphic(a, b)


def test_automorphism_counts_known():
    assert automorphism_count(complete(4)) == 24
    assert automorphism_count(cycle(5)) == 10
    assert automorphism_count(path(4)) == 2
    assert automorphism_count(star(3)) == 6
    assert automorphism_count(book(2)) == automorphisms_brute(book(2))
    assert automorphism_count(Graph.from_edges(1, [])) == 1


def test_automorphism_count_agrees_with_brute_force():
    rng = random.Random(41)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 6), rng.random())
        assert automorphism_count(g) == automorphisms_brute(g)


def test_pattern_constructors():
    assert Pattern.star(3).name == "s:3"
    assert Pattern.book(4).name == "b:4"
    assert Pattern.c4().name == "c4"
    assert Pattern.triangle().name == "k:3"
    assert Pattern.complete(3).name == "k:3"  # triangle gets its closed form
    assert Pattern.complete(4).name == "k:4"
    assert Pattern.path(4).name == "p:4"
    assert Pattern.star(3).kind == "star"
    assert Pattern.complete(4).kind == "generic"


def test_pattern_rejects_degenerate():
    with pytest.raises(GraphError):
        Pattern.star(1)
    with pytest.raises(GraphError):
        Pattern.book(1)
    with pytest.raises(GraphError):
        Pattern.path(1)
    with pytest.raises(GraphError):
        Pattern(Graph.from_edges(3, []))  # edgeless pattern
    # the two-vertex path is a bare edge and is allowed
    assert Pattern.path(2).graph.size == 1


def test_pattern_automorphisms_match_brute():
    for pat in (Pattern.star(3), Pattern.book(3), Pattern.c4(),
                Pattern.triangle(), Pattern.path(5), Pattern.complete(4)):
        assert pat.automorphisms == automorphisms_brute(pat.graph)


def test_generic_pattern_from_graph():
    paw = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    pat = Pattern(paw)
    assert pat.kind == "generic"
    assert pat.automorphisms == automorphisms_brute(paw)
