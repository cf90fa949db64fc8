"""Exact extremal numbers at small n by exhaustive search.

Four quantities are covered: ex_r(n, F) and its linear variant (hyperedges
of a Berge-F-free r-uniform hypergraph), the Turán number ex(n, F), and
the generalized Turán number ex(n, K_r, F). All use the same depth-first
search over candidate edges in lexicographic order, trying "include" before
"exclude":

* a branch is cut when even taking every remaining candidate cannot beat
  the best value found so far;
* freeness is checked only for copies through the newly added edge, which
  is enough because the current set is already free;
* the first candidate is always included, since any nonempty extremal
  object can be relabelled to contain it.

The first optimum reached is the lexicographically smallest one, which is
returned as the witness.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .core import Graph, Hypergraph
from .detect import ShadowIndex, search_berge
from .embed import Budget, canonical_form, has_copy_through

MODES = ("hypergraph", "linear-hypergraph", "graph", "generalized")

# largest n each mode accepts by default; keyed by r for the hypergraph modes
HYPERGRAPH_CAPS = {2: 9, 3: 7, 4: 7, 5: 8}
GRAPH_CAP = 9
GENERALIZED_CAP = 8


class CapExceeded(RuntimeError):
    """Refusal: the requested instance is above the configured size cap."""


def default_cap(mode: str, r: int) -> int:
    if mode == "graph":
        return GRAPH_CAP
    if mode == "generalized":
        return GENERALIZED_CAP
    return HYPERGRAPH_CAPS.get(r, r + 3)


@dataclass
class SearchResult:
    n: int
    r: int
    pattern: Graph
    mode: str
    value: int
    witness: Hypergraph | Graph
    nodes_explored: int
    elapsed: float = 0.0

    def to_dict(self, timing: bool = False) -> dict:
        out = {"n": self.n, "r": self.r, "mode": self.mode,
               "pattern": self.pattern.to_dict(), "value": self.value,
               "witness": self.witness.to_dict(), "nodes_explored": self.nodes_explored}
        if timing:
            out["elapsed"] = self.elapsed
        return out


class ResultCache:
    """Content-addressed store of search results, one JSON file per key."""

    def __init__(self, root: str | os.PathLike | None = None):
        root = root or os.environ.get("BERGE_CACHE_DIR") or Path.home() / ".cache" / "berge"
        self.root = Path(root)

    def key(self, n: int, r: int, pattern: Graph, mode: str) -> str:
        cn, edges = canonical_form(pattern)
        blob = json.dumps({"n": n, "r": r, "mode": mode, "pattern": [cn, [list(e) for e in edges]]},
                          sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()

    def get(self, n: int, r: int, pattern: Graph, mode: str) -> SearchResult | None:
        path = self.root / f"{self.key(n, r, pattern, mode)}.json"
        if not path.exists():
            return None
        data = json.loads(path.read_text())
        wit = data["witness"]
        witness = Hypergraph.from_dict(wit) if "hyperedges" in wit else Graph.from_dict(wit)
        return SearchResult(n, r, pattern, mode, data["value"], witness, data["nodes_explored"])

    def put(self, res: SearchResult) -> None:
        self.root.mkdir(parents=True, exist_ok=True)
        path = self.root / f"{self.key(res.n, res.r, res.pattern, res.mode)}.json"
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(res.to_dict(), sort_keys=True))
        tmp.replace(path)


def _check_cap(n: int, mode: str, r: int, cap: int | None) -> None:
    limit = default_cap(mode, r) if cap is None else cap
    if n > limit:
        raise CapExceeded(f"n={n} exceeds the {mode} cap {limit} for r={r}")


def _maximise(count: int, add, remove, value, bound, budget: Budget) -> tuple[int, list[int]]:
    """Include-first DFS over candidates 0..count-1.

    ``add(i)`` tries to include candidate i and reports success, ``remove(i)``
    undoes it; ``value(chosen)`` scores a leaf and ``bound(chosen, i)`` gives
    an optimistic score for extending ``chosen`` with candidates i..count-1.
    """
    best = value([])
    best_set: list[int] = []
    chosen: list[int] = []

    def rec(i: int) -> None:
        nonlocal best, best_set
        budget.tick()
        if bound(chosen, i) <= best:
            return
        if i == count:
            best, best_set = value(chosen), list(chosen)
            return
        if add(i):
            chosen.append(i)
            rec(i + 1)
            chosen.pop()
            remove(i)
        if i > 0:
            rec(i + 1)

    if count:
        rec(0)
    return best, best_set


def exact_ex_r(n: int, r: int, pattern: Graph, linear: bool = False, cap: int | None = None,
               node_limit: int | None = None, cache: ResultCache | None = None) -> SearchResult:
    """Largest r-uniform (optionally linear) Berge-``pattern``-free hypergraph on n vertices."""
    mode = "linear-hypergraph" if linear else "hypergraph"
    if pattern.m == 0:
        raise ValueError("pattern needs at least one edge")
    if r < 2 or n < 0:
        raise ValueError(f"invalid n={n}, r={r}")
    _check_cap(n, mode, r, cap)
    if cache is not None and (hit := cache.get(n, r, pattern, mode)) is not None:
        return hit
    start = time.perf_counter()
    cands = list(combinations(range(n), r))
    index = ShadowIndex(n)
    budget = Budget(node_limit)
    embed_budget = Budget(None)

    def add(i: int) -> bool:
        he = cands[i]
        if linear and any(p in index.pairs for p in combinations(he, 2)):
            return False
        index.add(i, he)
        if search_berge(index, pattern, through=i, budget=embed_budget) is not None:
            index.remove(i)
            return False
        return True

    value, chosen = _maximise(len(cands), add, index.remove, len,
                              lambda ch, i: len(ch) + len(cands) - i, budget)
    witness = Hypergraph(n, tuple(cands[i] for i in chosen), r)
    res = SearchResult(n, r, pattern, mode, value, witness, budget.nodes,
                       time.perf_counter() - start)
    if cache is not None:
        cache.put(res)
    return res


def _count_cliques(masks: list[int], r: int, within: int) -> int:
    """Number of r-cliques in the graph induced on the vertex mask ``within``."""
    if r == 0:
        return 1
    total = 0
    rest = within
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        if r == 1:
            total += 1
        else:
            total += _count_cliques(masks, r - 1, masks[v] & rest)
    return total


def _graph_search(n: int, r: int, pattern: Graph, mode: str, cap: int | None,
                  node_limit: int | None, cache: ResultCache | None) -> SearchResult:
    if pattern.m == 0:
        raise ValueError("pattern needs at least one edge")
    _check_cap(n, mode, r, cap)
    if cache is not None and (hit := cache.get(n, r, pattern, mode)) is not None:
        return hit
    start = time.perf_counter()
    cands = list(combinations(range(n), 2))
    masks = [0] * n
    budget = Budget(node_limit)
    full = (1 << n) - 1

    def add(i: int) -> bool:
        u, v = cands[i]
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        if has_copy_through(masks, pattern, u, v):
            remove(i)
            return False
        return True

    def remove(i: int) -> None:
        u, v = cands[i]
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)

    if mode == "graph":
        value_fn = len

        def bound(chosen, i):
            return len(chosen) + len(cands) - i
    else:
        def value_fn(chosen):
            return _count_cliques(masks, r, full)

        def bound(chosen, i):
            # cliques never disappear when edges are added
            opt = list(masks)
            for u, v in cands[i:]:
                opt[u] |= 1 << v
                opt[v] |= 1 << u
            return _count_cliques(opt, r, full)

    value, chosen = _maximise(len(cands), add, remove, value_fn, bound, budget)
    witness = Graph(n, tuple(cands[i] for i in chosen))
    res = SearchResult(n, r, pattern, mode, value, witness, budget.nodes,
                       time.perf_counter() - start)
    if cache is not None:
        cache.put(res)
    return res


def exact_turan(n: int, pattern: Graph, cap: int | None = None, node_limit: int | None = None,
                cache: ResultCache | None = None) -> SearchResult:
    """Most edges in a ``pattern``-free graph on n vertices."""
    return _graph_search(n, 2, pattern, "graph", cap, node_limit, cache)


def exact_generalized_turan(n: int, r: int, pattern: Graph, cap: int | None = None,
                            node_limit: int | None = None,
                            cache: ResultCache | None = None) -> SearchResult:
    """Most copies of K_r in a ``pattern``-free graph on n vertices."""
    if r < 1:
        raise ValueError("r must be positive")
    return _graph_search(n, r, pattern, "generalized", cap, node_limit, cache)


@dataclass
class SandwichResult:
    n: int
    r: int
    generalized: int
    ex_r: int
    turan: int

    @property
    def ok(self) -> bool:
        return self.generalized <= self.ex_r <= self.generalized + self.turan

    def to_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "generalized": self.generalized,
                "ex_r": self.ex_r, "turan": self.turan, "ok": self.ok}


def sandwich_check(n: int, r: int, pattern: Graph, cache: ResultCache | None = None) -> SandwichResult:
    """ex(n,K_r,F) <= ex_r(n,F) <= ex(n,K_r,F) + ex(n,F), computed exactly."""
    gen = exact_generalized_turan(n, r, pattern, cache=cache).value
    hyp = exact_ex_r(n, r, pattern, cache=cache).value
    tur = exact_turan(n, pattern, cache=cache).value
    return SandwichResult(n, r, gen, hyp, tur)


def search(mode: str, n: int, r: int, pattern: Graph, **kw) -> SearchResult:
    if mode == "hypergraph":
        return exact_ex_r(n, r, pattern, **kw)
    if mode == "linear-hypergraph":
        return exact_ex_r(n, r, pattern, linear=True, **kw)
    if mode == "graph":
        return exact_turan(n, pattern, **kw)
    if mode == "generalized":
        return exact_generalized_turan(n, r, pattern, **kw)
    raise ValueError(f"unknown mode {mode!r}; choose from {MODES}")

