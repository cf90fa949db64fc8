"""Exact chromatic number, clique number and small Ramsey numbers."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .core import Graph
from .embed import Budget, ResourceExhausted, _bits, has_copy_through

DEFAULT_RAMSEY_NMAX = 8
DEFAULT_RAMSEY_BUDGET = 2_000_000


def _greedy_clique(masks: list[int]) -> int:
    best = 1 if masks else 0
    for start in range(len(masks)):
        cand = masks[start]
        size = 1
        while cand:
            # take the candidate with most neighbours inside the candidate set
            v = max(_bits(cand), key=lambda x: ((masks[x] & cand).bit_count(), -x))
            size += 1
            cand &= masks[v]
        best = max(best, size)
    return best


def _greedy_colouring(masks: list[int]) -> int:
    n = len(masks)
    colour = [-1] * n
    for v in sorted(range(n), key=lambda x: (-masks[x].bit_count(), x)):
        taken = {colour[u] for u in _bits(masks[v]) if colour[u] >= 0}
        c = 0
        while c in taken:
            c += 1
        colour[v] = c
    return max(colour, default=-1) + 1


def _k_colourable(masks: list[int], k: int) -> bool:
    n = len(masks)
    colour = [-1] * n

    def pick() -> int:
        # DSATUR: most distinct neighbour colours, then highest degree
        best, key = -1, None
        for v in range(n):
            if colour[v] >= 0:
                continue
            sat = len({colour[u] for u in _bits(masks[v]) if colour[u] >= 0})
            cand = (sat, masks[v].bit_count(), -v)
            if key is None or cand > key:
                best, key = v, cand
        return best

    def rec(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        taken = {colour[u] for u in _bits(masks[v]) if colour[u] >= 0}
        # a brand-new colour is interchangeable with any other unused one
        for c in range(min(used + 1, k)):
            if c in taken:
                continue
            colour[v] = c
            if rec(done + 1, max(used, c + 1)):
                return True
        colour[v] = -1
        return False

    return rec(0, 0)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by iterative deepening between greedy bounds."""
    if g.n < 1:
        raise ValueError("chromatic number needs at least one vertex")
    masks = g.adjacency_masks()
    lo = _greedy_clique(masks)
    hi = _greedy_colouring(masks)
    for k in range(lo, hi):
        if _k_colourable(masks, k):
            return k
    return hi


def clique_number(g: Graph) -> int:
    """Exact clique number; branch and bound with a greedy colouring bound."""
    if g.n < 1:
        raise ValueError("clique number needs at least one vertex")
    masks = g.adjacency_masks()
    best = 1

    def colour_sort(p: int) -> list[tuple[int, int]]:
        # greedy colour classes; returns (vertex, colour bound) in increasing bound
        out = []
        k = 0
        rest = p
        while rest:
            k += 1
            q = rest
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~masks[v] & ~low
                rest &= ~low
                out.append((v, k))
        return out

    def expand(size: int, p: int) -> None:
        nonlocal best
        order = colour_sort(p)
        for v, bound in reversed(order):
            if size + bound <= best:
                return
            np = p & masks[v]
            if np:
                expand(size + 1, np)
            elif size + 1 > best:
                best = size + 1
            p &= ~(1 << v)

    expand(0, (1 << g.n) - 1)
    return best


def is_bipartite(g: Graph) -> bool:
    return two_colouring(g) is not None


def two_colouring(g: Graph) -> list[int] | None:
    """Proper 2-colouring with the smallest vertex of each component on side 0."""
    adj = g.adjacency()
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    stack.append(v)
                elif side[v] == side[u]:
                    return None
    return side


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """``g`` with edge ``e`` removed; vertex set unchanged."""
    u, v = e
    key = (u, v) if u < v else (v, u)
    if key not in set(g.edges):
        raise ValueError(f"edge {e} not in graph")
    return Graph(g.n, tuple(x for x in g.edges if x != key))


@dataclass
class RamseyResult:
    """Outcome of an exhaustive two-colouring search.

    ``value`` is None when an avoiding colouring exists at ``n_max``
    (the Ramsey number exceeds the search range). ``witness`` holds the red
    edges of an avoiding colouring on ``witness_n`` vertices, the largest
    ``n`` searched that has one.
    """

    value: int | None
    n_max: int
    witness_n: int | None = None
    witness: list[tuple[int, int]] | None = None
    nodes: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "value": self.value if self.value is not None else f"> {self.n_max}",
            "n_max": self.n_max,
            "witness_n": self.witness_n,
            "witness_red_edges": [list(e) for e in self.witness] if self.witness is not None else None,
            "nodes": {str(k): v for k, v in sorted(self.nodes.items())},
        }


def _search_branch(n: int, red_pat: Graph, blue_pat: Graph, d: int,
                   limit: int | None) -> tuple[list[tuple[int, int]] | None, int]:
    """Search colourings of K_n in which vertex 0 is red exactly to 1..d.

    Any colouring can be relabelled into this form, so the branches over d
    cover the whole space. Returns (red edges of an avoiding colouring or
    None, nodes explored).
    """
    budget = Budget(limit)
    red = [0] * n
    blue = [0] * n

    def assign(u: int, v: int, is_red: bool) -> bool:
        masks, pat = (red, red_pat) if is_red else (blue, blue_pat)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        return not has_copy_through(masks, pat, u, v)

    def undo(u: int, v: int, is_red: bool) -> None:
        masks = red if is_red else blue
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)

    for j in range(1, n):
        budget.tick()
        if not assign(0, j, j <= d):
            return None, budget.nodes

    rest = [(i, j) for j in range(2, n) for i in range(1, j)]

    def rec(k: int) -> bool:
        if k == len(rest):
            return True
        u, v = rest[k]
        for colour in (True, False):
            budget.tick()
            ok = assign(u, v, colour)
            if ok and rec(k + 1):
                return True
            undo(u, v, colour)
        return False

    if rec(0):
        edges = [(u, v) for u in range(n) for v in _bits(red[u]) if u < v]
        return edges, budget.nodes
    return None, budget.nodes


def _avoiding_colouring(n: int, g1: Graph, g2: Graph, budget: int | None,
                        threads: int) -> tuple[list[tuple[int, int]] | None, int]:
    """First avoiding colouring of K_n (lowest red degree of vertex 0 first).

    Node accounting is the cumulative count over branches up to the one that
    decides the answer, which makes it identical for serial and parallel runs.
    """
    ds = list(range(n))
    if threads > 1 and n > 1:
        with ProcessPoolExecutor(max_workers=min(threads, n)) as pool:
            futures = [pool.submit(_search_branch, n, g1, g2, d, budget) for d in ds]
            results = []
            for f in futures:
                try:
                    results.append(f.result())
                except ResourceExhausted:
                    results.append(None)
    else:
        results = None

    total = 0
    for d in ds:
        if results is None:
            remaining = None if budget is None else budget - total
            try:
                found, nodes = _search_branch(n, g1, g2, d, remaining)
            except ResourceExhausted:
                raise ResourceExhausted(f"Ramsey search on K_{n} exceeded {budget} nodes") from None
        else:
            if results[d] is None:
                raise ResourceExhausted(f"Ramsey search on K_{n} exceeded {budget} nodes")
            found, nodes = results[d]
        total += nodes
        if budget is not None and total > budget:
            raise ResourceExhausted(f"Ramsey search on K_{n} exceeded {budget} nodes")
        if found is not None:
            return found, total
    return None, total


def ramsey_number(g1: Graph, g2: Graph, n_max: int = DEFAULT_RAMSEY_NMAX,
                  budget: int | None = DEFAULT_RAMSEY_BUDGET,
                  threads: int = 1) -> RamseyResult:
    """Smallest n <= n_max with every red/blue K_n holding red g1 or blue g2.

    Searched exhaustively from n = max(|V(g1)|, |V(g2)|) upwards, since any
    smaller K_n trivially avoids one of them. A colouring that avoids both
    at ``n`` proves R > n. Raises ``ResourceExhausted`` if one level needs
    more than ``budget`` nodes.
    """
    if g1.m == 0 or g2.m == 0:
        raise ValueError("Ramsey search needs patterns with at least one edge")
    start = max(g1.n, g2.n)
    result = RamseyResult(None, n_max)
    for n in range(start, n_max + 1):
        found, nodes = _avoiding_colouring(n, g1, g2, budget, threads)
        result.nodes[n] = nodes
        if found is None:
            result.value = n
            return result
        result.witness_n, result.witness = n, found
    return result


def default_threads() -> int:
    return os.cpu_count() or 1
