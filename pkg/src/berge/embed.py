"""Backtracking subgraph embedding over bitmask adjacency.

An embedding of a pattern ``F`` into a host graph is an injective map of
``V(F)`` into the host under which every edge of ``F`` lands on a host
edge (non-induced). This is the search kernel shared by the Berge
detector, the Ramsey search and the Turán oracles.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterator, Mapping, Sequence

from .core import Graph


class ResourceExhausted(RuntimeError):
    """A search hit its configured node limit before reaching an answer."""


class Budget:
    """Counts search nodes and raises once ``limit`` is exceeded."""

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise ResourceExhausted(f"node limit {self.limit} exceeded")


def degree_order(pattern: Graph) -> list[int]:
    """Pattern vertices by descending degree, ties by label."""
    deg = pattern.degrees()
    return sorted(range(pattern.n), key=lambda v: (-deg[v], v))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def iter_embeddings(host: Sequence[int], pattern: Graph,
                    fixed: Mapping[int, int] | None = None,
                    order: Sequence[int] | None = None,
                    budget: Budget | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every embedding of ``pattern`` into the host given as adjacency masks.

    Embeddings come out as tuples ``psi`` with ``psi[v]`` the image of pattern
    vertex ``v``. Vertices in ``fixed`` are pinned; the rest are placed in
    ``order`` (default: descending degree) with host candidates ascending.
    """
    k = pattern.n
    nh = len(host)
    if k > nh:
        return
    fixed = dict(fixed or {})
    if order is None:
        order = degree_order(pattern)
    seq = list(fixed) + [v for v in order if v not in fixed]
    padj = pattern.adjacency()
    pdeg = pattern.degrees()

    hdeg = [m.bit_count() for m in host]
    by_degree = {}
    for d in set(pdeg):
        mask = 0
        for x in range(nh):
            if hdeg[x] >= d:
                mask |= 1 << x
        by_degree[d] = mask

    placed_before = []
    seen = set()
    for v in seq:
        placed_before.append([u for u in padj[v] if u in seen])
        seen.add(v)

    psi = [-1] * k
    full = (1 << nh) - 1

    def rec(depth: int, used: int) -> Iterator[tuple[int, ...]]:
        if depth == k:
            yield tuple(psi)
            return
        v = seq[depth]
        cand = by_degree[pdeg[v]] & ~used
        for u in placed_before[depth]:
            cand &= host[psi[u]]
        if v in fixed:
            target = fixed[v]
            cand &= (1 << target) if 0 <= target < nh else 0
        cand &= full
        for x in _bits(cand):
            if budget is not None:
                budget.tick()
            psi[v] = x
            yield from rec(depth + 1, used | (1 << x))
        psi[v] = -1

    yield from rec(0, 0)


def find_embedding(host: Graph, pattern: Graph, budget: Budget | None = None) -> tuple[int, ...] | None:
    for psi in iter_embeddings(host.adjacency_masks(), pattern, budget=budget):
        return psi
    return None


def contains_subgraph(host: Graph, pattern: Graph, budget: Budget | None = None) -> bool:
    return find_embedding(host, pattern, budget) is not None


def has_copy_through(host: Sequence[int], pattern: Graph, u: int, v: int,
                     budget: Budget | None = None) -> bool:
    """Whether some copy of ``pattern`` in the host uses the host edge ``uv``."""
    # one pinned edge per automorphism orbit covers every copy
    for a, b in _orbit_reps(pattern):
        for x, y in ((u, v), (v, u)):
            for _ in iter_embeddings(host, pattern, fixed={a: x, b: y}, budget=budget):
                return True
    return False


@lru_cache(maxsize=64)
def _orbit_reps(pattern: Graph) -> tuple[tuple[int, int], ...]:
    return tuple(orbit[0] for orbit in edge_orbits(pattern))


def count_embeddings(host: Graph, pattern: Graph) -> int:
    return sum(1 for _ in iter_embeddings(host.adjacency_masks(), pattern))


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms of ``g``, found as the embeddings of ``g`` into itself."""
    # a bijective edge-preserving self-map on a finite graph preserves non-edges too
    return list(iter_embeddings(g.adjacency_masks(), g))


def edge_orbits(g: Graph) -> list[list[tuple[int, int]]]:
    """Edges grouped into orbits under the automorphism group, each sorted."""
    auts = automorphisms(g)
    remaining = set(g.edges)
    orbits = []
    for e in g.edges:
        if e not in remaining:
            continue
        orbit = set()
        for p in auts:
            a, b = p[e[0]], p[e[1]]
            orbit.add((a, b) if a < b else (b, a))
        remaining -= orbit
        orbits.append(sorted(orbit))
    return orbits


def canonical_form(g: Graph, max_n: int = 8) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Isomorphism-invariant key for small graphs.

    Lexicographically least relabelled edge list over all vertex orders
    that list vertices by descending degree. Graphs above ``max_n``
    vertices fall back to their labelled edge list.
    """
    if g.n > max_n:
        return g.n, g.edges
    deg = g.degrees()
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(deg[v], []).append(v)
    groups = [classes[d] for d in sorted(classes, reverse=True)]

    best = None

    def rec(i: int, prefix: list[int]):
        nonlocal best
        if i == len(groups):
            pos = {v: j for j, v in enumerate(prefix)}
            key = tuple(sorted(tuple(sorted((pos[a], pos[b]))) for a, b in g.edges))
            if best is None or key < best:
                best = key
            return
        for perm in permutations(groups[i]):
            rec(i + 1, prefix + list(perm))

    rec(0, [])
    return g.n, best
