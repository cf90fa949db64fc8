"""Berge-F containment: decide, certify, verify, and count shadow copies.

A hypergraph contains a Berge-F exactly when its 2-shadow holds a copy of
F whose edges can be covered by pairwise distinct hyperedges. The search
enumerates copies of F in the shadow and, for each, looks for a system of
distinct representatives (a perfect matching from F's edges into the
hyperedges that contain their images).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Mapping, Sequence

from .core import Edge, Graph, Hypergraph
from .embed import Budget, _orbit_reps, automorphisms, degree_order, iter_embeddings


@dataclass(frozen=True)
class BergeCertificate:
    """``psi``: pattern vertex -> host vertex; ``phi``: pattern edge -> hyperedge index."""

    psi: Mapping[int, int]
    phi: Mapping[Edge, int]

    def to_dict(self) -> dict:
        return {
            "psi": {str(u): self.psi[u] for u in sorted(self.psi)},
            "phi": {f"{u}-{v}": self.phi[(u, v)] for u, v in sorted(self.phi)},
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "BergeCertificate":
        psi = {int(k): int(v) for k, v in data["psi"].items()}
        phi = {}
        for key, idx in data["phi"].items():
            a, b = (int(x) for x in key.split("-"))
            phi[(min(a, b), max(a, b))] = int(idx)
        return cls(psi, phi)


def _perfect_matching(options: Sequence[Sequence[int]]) -> list[int] | None:
    """Kuhn's augmenting paths; left side i may take any right vertex in options[i]."""
    owner: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for h in options[i]:
            if h in seen:
                continue
            seen.add(h)
            if h not in owner or augment(owner[h], seen):
                owner[h] = i
                return True
        return False

    for i in range(len(options)):
        if not augment(i, set()):
            return None
    assignment = [-1] * len(options)
    for h, i in owner.items():
        assignment[i] = h
    return assignment


class ShadowIndex:
    """Mutable shadow of a growing hyperedge collection.

    Keeps adjacency masks and, per shadow edge, the ascending list of
    hyperedge ids containing it. Used directly by the oracle's incremental
    search; ``contains_berge`` builds a throwaway one.
    """

    def __init__(self, n: int):
        self.n = n
        self.masks = [0] * n
        self.pairs: dict[Edge, list[int]] = {}
        self.members: dict[int, tuple[int, ...]] = {}

    def add(self, hid: int, he: Sequence[int]) -> None:
        self.members[hid] = tuple(he)
        for i, u in enumerate(he):
            for v in he[i + 1:]:
                key = (u, v) if u < v else (v, u)
                lst = self.pairs.setdefault(key, [])
                lst.append(hid)
                lst.sort()
                self.masks[u] |= 1 << v
                self.masks[v] |= 1 << u

    def remove(self, hid: int) -> None:
        he = self.members.pop(hid)
        for i, u in enumerate(he):
            for v in he[i + 1:]:
                key = (u, v) if u < v else (v, u)
                lst = self.pairs[key]
                lst.remove(hid)
                if not lst:
                    del self.pairs[key]
                    self.masks[u] &= ~(1 << v)
                    self.masks[v] &= ~(1 << u)

    @classmethod
    def of(cls, h: Hypergraph) -> "ShadowIndex":
        idx = cls(h.n)
        for i, he in enumerate(h.hyperedges):
            idx.add(i, he)
        return idx


def search_berge(index: ShadowIndex, pattern: Graph, through: int | None = None,
                 budget: Budget | None = None) -> BergeCertificate | None:
    """First Berge copy of ``pattern`` in the indexed host, or None.

    With ``through`` set, only shadow copies that place some pattern edge
    inside that hyperedge are considered; when the rest of the host is
    Berge-free, every Berge copy has this form.
    """
    edges = pattern.edges
    order = degree_order(pattern)
    if through is None:
        seeds = [None]
    else:
        he = index.members[through]
        # up to automorphism it suffices to pin one edge per orbit
        seeds = [{a: x, b: y} for a, b in _orbit_reps(pattern)
                 for x in he for y in he if x != y]

    for fixed in seeds:
        for psi in iter_embeddings(index.masks, pattern, fixed=fixed, order=order, budget=budget):
            options = []
            for a, b in edges:
                x, y = psi[a], psi[b]
                options.append(index.pairs[(x, y) if x < y else (y, x)])
            assignment = _perfect_matching(options)
            if assignment is not None:
                return BergeCertificate(
                    {v: psi[v] for v in range(pattern.n)},
                    {e: assignment[i] for i, e in enumerate(edges)},
                )
    return None


def contains_berge(h: Hypergraph, pattern: Graph, node_limit: int | None = None) -> BergeCertificate | None:
    """Return a Berge-``pattern`` certificate in ``h`` or None if ``h`` is free.

    Deterministic: pattern vertices are placed by descending degree and host
    candidates tried in ascending order, so the same inputs always give the
    same certificate. Raises ``ResourceExhausted`` past ``node_limit``.
    """
    if pattern.m == 0:
        raise ValueError("Berge containment is undefined for an edgeless pattern")
    if len(h) < pattern.m:
        return None
    return search_berge(ShadowIndex.of(h), pattern, budget=Budget(node_limit))


def verify_certificate(h: Hypergraph, pattern: Graph, cert: BergeCertificate) -> bool:
    """Re-check a certificate against the definition, independently of the search."""
    psi, phi = cert.psi, cert.phi
    if set(psi) != set(range(pattern.n)):
        return False
    if set(phi) != set(pattern.edges):
        return False
    images = list(psi.values())
    if len(set(images)) != len(images) or any(not 0 <= x < h.n for x in images):
        return False
    chosen = list(phi.values())
    if len(set(chosen)) != len(chosen) or any(not 0 <= i < len(h) for i in chosen):
        return False
    for (u, v), i in phi.items():
        he = h.hyperedges[i]
        if psi[u] not in he or psi[v] not in he:
            return False
    return True


def automorphism_count(pattern: Graph) -> int:
    """|Aut(F)| by checking every vertex permutation."""
    edges = set(pattern.edges)
    count = 0
    for p in permutations(range(pattern.n)):
        if all(tuple(sorted((p[u], p[v]))) in edges for u, v in pattern.edges):
            count += 1
    return count


def count_f_copies_in_shadow(h: Hypergraph, pattern: Graph) -> int:
    """Number of (not necessarily induced) subgraphs of the shadow isomorphic to ``pattern``."""
    index = ShadowIndex.of(h)
    labelled = sum(1 for _ in iter_embeddings(index.masks, pattern))
    aut = automorphism_count(pattern) if pattern.n <= 8 else len(automorphisms(pattern))
    return labelled // aut
