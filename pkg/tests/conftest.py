"""Shared brute-force oracles.

Everything here is deliberately naive and shares no code with the package
search kernels beyond the Graph/Hypergraph containers.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

import pytest

from berge.core import Graph, Hypergraph

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def naive_berge(h: Hypergraph, f: Graph) -> bool:
    """Try every injective edge->hyperedge map, then every compatible vertex map."""
    edges = list(f.edges)
    for phi in permutations(range(len(h.hyperedges)), len(edges)):
        cand = [set(range(h.n)) for _ in range(f.n)]
        for (u, v), i in zip(edges, phi):
            he = set(h.hyperedges[i])
            cand[u] &= he
            cand[v] &= he
        if any(not c for c in cand):
            continue
        for psi in product(*[sorted(c) for c in cand]):
            if len(set(psi)) == f.n:
                return True
    return False


def naive_contains(host: Graph, f: Graph) -> bool:
    hedges = set(host.edges)
    for psi in permutations(range(host.n), f.n):
        if all(tuple(sorted((psi[u], psi[v]))) in hedges for u, v in f.edges):
            return True
    return False


def naive_chromatic(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for col in product(range(k), repeat=g.n):
            if all(col[u] != col[v] for u, v in g.edges):
                return k
    return g.n


def naive_clique(g: Graph) -> int:
    es = set(g.edges)
    best = 1
    for size in range(2, g.n + 1):
        for s in combinations(range(g.n), size):
            if all(p in es for p in combinations(s, 2)):
                best = size
    return best


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    eb = set(b.edges)
    return any(all(tuple(sorted((p[u], p[v]))) in eb for u, v in a.edges)
               for p in permutations(range(a.n)))


def naive_copies(host: Graph, f: Graph) -> int:
    """Count edge subsets of the host forming a copy of f (f without isolated vertices)."""
    count = 0
    for sub in combinations(host.edges, f.m):
        verts = sorted({v for e in sub for v in e})
        if len(verts) != f.n:
            continue
        pos = {v: i for i, v in enumerate(verts)}
        g = Graph(f.n, tuple((pos[u], pos[v]) for u, v in sub))
        if is_isomorphic(g, f):
            count += 1
    return count


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]
        yield [[first]] + p


def naive_ramsey_avoidable(n: int, g1: Graph, g2: Graph) -> bool:
    pairs = list(combinations(range(n), 2))
    for bits in product((0, 1), repeat=len(pairs)):
        red = Graph(n, tuple(p for p, b in zip(pairs, bits) if b))
        blue = Graph(n, tuple(p for p, b in zip(pairs, bits) if not b))
        if not naive_contains(red, g1) and not naive_contains(blue, g2):
            return True
    return False


def naive_ex_r(n: int, r: int, f: Graph, linear: bool = False) -> int:
    cands = list(combinations(range(n), r))
    best = 0
    for mask in range(1 << len(cands)):
        chosen = [c for i, c in enumerate(cands) if mask >> i & 1]
        if len(chosen) <= best:
            continue
        if linear and any(len(set(a) & set(b)) > 1 for a, b in combinations(chosen, 2)):
            continue
        if not naive_berge(Hypergraph(n, tuple(chosen)), f):
            best = len(chosen)
    return best


def naive_turan(n: int, f: Graph) -> int:
    pairs = list(combinations(range(n), 2))
    best = 0
    for mask in range(1 << len(pairs)):
        if bin(mask).count("1") <= best:
            continue
        g = Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))
        if not naive_contains(g, f):
            best = g.m
    return best


def naive_generalized(n: int, r: int, f: Graph) -> int:
    pairs = list(combinations(range(n), 2))
    best = 0
    for mask in range(1 << len(pairs)):
        g = Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))
        es = set(g.edges)
        cliques = sum(1 for s in combinations(range(n), r)
                      if all(p in es for p in combinations(s, 2)))
        if cliques > best and not naive_contains(g, f):
            best = cliques
    return best


def random_hypergraph(rng: random.Random, max_n: int = 7, max_m: int = 6) -> Hypergraph:
    n = rng.randint(3, max_n)
    edges = set()
    for _ in range(rng.randint(0, max_m)):
        size = rng.randint(2, min(4, n))
        edges.add(tuple(sorted(rng.sample(range(n), size))))
    return Hypergraph(n, tuple(edges))


@pytest.fixture
def rng():
    return random.Random(20240611)
