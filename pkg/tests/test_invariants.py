import pytest
from hypothesis import given, settings, strategies as st

from berge import patterns
from berge.core import Graph
from berge.embed import (ResourceExhausted, automorphisms, canonical_form, contains_subgraph,
                         edge_orbits)
from berge.invariants import (chromatic_number, clique_number, delete_edge, is_bipartite,
                              ramsey_number, two_colouring)

from conftest import (is_isomorphic, naive_chromatic, naive_clique, naive_contains,
                      naive_ramsey_avoidable)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, tuple(chosen))


@pytest.mark.parametrize("name, chi, omega", [
    ("K3", 3, 3), ("K5", 5, 5), ("C5", 3, 2), ("C6", 2, 2), ("P4", 2, 2),
    ("K211", 3, 3), ("petersen", 3, 2), ("K3,3", 2, 2),
])
def test_known_invariants(name, chi, omega):
    g = patterns.by_name(name)
    assert chromatic_number(g) == chi
    assert clique_number(g) == omega


def test_edgeless_graph():
    assert chromatic_number(Graph(4)) == 1
    assert clique_number(Graph(4)) == 1
    with pytest.raises(ValueError):
        chromatic_number(Graph(0))


def test_two_colouring():
    assert two_colouring(patterns.cycle(4)) == [0, 1, 0, 1]
    assert two_colouring(patterns.cycle(5)) is None
    assert is_bipartite(patterns.path(4))
    assert not is_bipartite(patterns.complete(3))


def test_delete_edge():
    assert delete_edge(patterns.complete(3), (1, 0)) == patterns.path(3).__class__(3, ((0, 2), (1, 2)))
    with pytest.raises(ValueError):
        delete_edge(patterns.path(3), (0, 2))


def test_edge_orbits_k211():
    orbits = edge_orbits(patterns.by_name("K211"))
    assert sorted(len(o) for o in orbits) == [1, 4]
    assert len(automorphisms(patterns.by_name("K211"))) == 4
    assert len(automorphisms(patterns.petersen())) == 120


@pytest.mark.parametrize("g1, g2, value", [
    ("P3", "P3", 3), ("K3", "P3", 5), ("K3", "K3", 6), ("K211", "C4", 7),
])
def test_ramsey_small(g1, g2, value):
    res = ramsey_number(patterns.by_name(g1), patterns.by_name(g2), threads=1)
    assert res.value == value
    if res.witness_n is None:
        # search starts at max(|V|) and nothing smaller is examined
        assert value == max(patterns.by_name(g1).n, patterns.by_name(g2).n)
        return
    assert res.witness_n == value - 1
    red = Graph(res.witness_n, tuple(res.witness))
    pairs = {(i, j) for j in range(red.n) for i in range(j)}
    blue = Graph(red.n, tuple(sorted(pairs - set(red.edges))))
    assert not contains_subgraph(red, patterns.by_name(g1))
    assert not contains_subgraph(blue, patterns.by_name(g2))


@pytest.mark.parametrize("g1, g2, n, avoidable", [
    ("K3", "P3", 4, True), ("K3", "P3", 5, False), ("P3", "P3", 2, True), ("P3", "P3", 3, False),
])
def test_ramsey_frozen_from_naive(g1, g2, n, avoidable):
    # frozen values from the exhaustive colouring enumerator
    a, b = patterns.by_name(g1), patterns.by_name(g2)
    assert naive_ramsey_avoidable(n, a, b) == avoidable


def test_ramsey_beyond_range_and_budget():
    res = ramsey_number(patterns.complete(4), delete_edge(patterns.complete(4), (0, 1)), n_max=8)
    assert res.value is None and res.to_dict()["value"] == "> 8"
    with pytest.raises(ResourceExhausted):
        ramsey_number(patterns.complete(3), patterns.complete(3), budget=10)


def test_ramsey_thread_agreement():
    a = ramsey_number(patterns.by_name("K211"), patterns.cycle(4), threads=1).to_dict()
    b = ramsey_number(patterns.by_name("K211"), patterns.cycle(4), threads=2).to_dict()
    assert a == b


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_chromatic_and_clique_match_naive(g):
    chi, om = chromatic_number(g), clique_number(g)
    assert chi == naive_chromatic(g)
    assert om == naive_clique(g)
    assert om <= chi <= g.n


@given(graphs())
@settings(max_examples=100, deadline=None)
def test_two_colouring_is_proper(g):
    col = two_colouring(g)
    assert (col is not None) == (naive_chromatic(g) <= 2)
    if col is not None:
        assert all(col[u] != col[v] for u, v in g.edges)


@given(graphs(max_n=6), graphs(max_n=4))
@settings(max_examples=150, deadline=None)
def test_subgraph_matches_naive(host, f):
    assert contains_subgraph(host, f) == naive_contains(host, f)


@given(graphs(max_n=6), st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_canonical_form_is_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = Graph(g.n, tuple((perm[u], perm[v]) for u, v in g.edges))
    assert canonical_form(g) == canonical_form(h)
    assert is_isomorphic(g, h)
