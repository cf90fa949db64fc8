import pytest

from berge import patterns
from berge.core import is_linear
from berge.detect import contains_berge
from berge.embed import ResourceExhausted, contains_subgraph
from berge.oracle import (CapExceeded, ResultCache, default_cap, exact_ex_r,
                          exact_generalized_turan, exact_turan, sandwich_check, search)

from conftest import naive_ex_r, naive_generalized, naive_turan

K3, K4 = patterns.complete(3), patterns.complete(4)


@pytest.mark.parametrize("n, r, name, linear, value", [
    (4, 3, "K3", False, 2), (5, 3, "K3", False, 3), (5, 3, "K3", True, 2), (5, 3, "K4", False, 5),
    (5, 3, "P3", False, 1), (5, 4, "K3", False, 2), (5, 3, "C4", False, 3),
])
def test_ex_r_matches_naive(n, r, name, linear, value):
    f = patterns.by_name(name)
    res = exact_ex_r(n, r, f, linear=linear)
    assert res.value == value == naive_ex_r(n, r, f, linear)
    assert len(res.witness) == value
    assert contains_berge(res.witness, f) is None
    if linear:
        assert is_linear(res.witness)


@pytest.mark.parametrize("n, r, name, value", [
    (6, 3, "K4", 8), (6, 4, "K4", 5), (7, 3, "K3", 6),
])
def test_ex_r_frozen_larger(n, r, name, value):
    res = exact_ex_r(n, r, patterns.by_name(name))
    assert res.value == value
    assert contains_berge(res.witness, patterns.by_name(name)) is None


@pytest.mark.parametrize("n, name, value", [
    (4, "K3", 4), (5, "K3", 6), (6, "K3", 9), (5, "K4", 8), (5, "P3", 2), (5, "C4", 6),
])
def test_turan_matches_naive(n, name, value):
    f = patterns.by_name(name)
    res = exact_turan(n, f)
    assert res.value == value == naive_turan(n, f)
    assert res.witness.m == value and not contains_subgraph(res.witness, f)


def test_turan_frozen_larger():
    assert exact_turan(7, K3).value == 12
    assert exact_turan(8, K3).value == 16


@pytest.mark.parametrize("n, r, name, value", [(4, 3, "K4", 2), (5, 3, "K4", 4), (5, 3, "K3", 0)])
def test_generalized_matches_naive(n, r, name, value):
    f = patterns.by_name(name)
    assert exact_generalized_turan(n, r, f).value == value == naive_generalized(n, r, f)


def test_generalized_frozen():
    assert exact_generalized_turan(6, 3, K4).value == 8


def test_sandwich():
    s = sandwich_check(4, 3, K3)
    assert (s.generalized, s.ex_r, s.turan) == (0, 2, 4)
    assert s.ok
    for n in range(1, 6):
        for f in (K3, K4):
            assert sandwich_check(n, 3, f).ok


def test_caps_and_limits():
    assert default_cap("hypergraph", 3) == 7
    assert default_cap("hypergraph", 6) == 9
    assert default_cap("graph", 2) == 9
    with pytest.raises(CapExceeded):
        exact_ex_r(8, 3, K3)
    with pytest.raises(CapExceeded):
        exact_turan(10, K3)
    with pytest.raises(ResourceExhausted):
        exact_ex_r(6, 3, K4, node_limit=20)
    with pytest.raises(ValueError):
        search("nope", 4, 3, K3)


def test_lex_smallest_witness():
    res = exact_ex_r(4, 3, K3)
    assert res.witness.hyperedges == ((0, 1, 2), (0, 1, 3))


def test_cache_roundtrip(tmp_path):
    cache = ResultCache(tmp_path)
    first = exact_ex_r(5, 3, K3, cache=cache)
    assert len(list(tmp_path.glob("*.json"))) == 1
    # an isomorphic relabelling of the pattern hits the same entry
    relabelled = patterns.path(3).__class__(3, ((0, 2), (1, 2), (0, 1)))
    second = exact_ex_r(5, 3, relabelled, cache=cache)
    assert second.to_dict() == first.to_dict()
    assert cache.key(5, 3, K3, "hypergraph") != cache.key(5, 3, K3, "linear-hypergraph")


def test_cache_env(tmp_path, monkeypatch):
    monkeypatch.setenv("BERGE_CACHE_DIR", str(tmp_path / "c"))
    assert ResultCache().root == tmp_path / "c"


def test_timing_excluded_by_default():
    res = exact_turan(5, K3)
    assert "elapsed" not in res.to_dict()
    assert "elapsed" in res.to_dict(timing=True)


@pytest.mark.parametrize("r, name", [(3, "K3"), (3, "K4"), (3, "P3"), (4, "K4")])
def test_monotone_in_n_and_linear_below(r, name):
    f = patterns.by_name(name)
    vals = [exact_ex_r(n, r, f).value for n in range(r, 7)]
    lin = [exact_ex_r(n, r, f, linear=True).value for n in range(r, 7)]
    assert vals == sorted(vals) and lin == sorted(lin)
    assert all(a <= b for a, b in zip(lin, vals))


def test_construction_floor():
    from berge.construct import linear_construction, rpartite_construction
    assert exact_ex_r(6, 3, K4).value >= len(rpartite_construction(6, 3).hypergraph) == 8
    assert exact_ex_r(6, 3, K4, linear=True).value >= len(linear_construction(6, 3).hypergraph)
