"""Graph and hypergraph values plus the structural maps between them.

Everything here is immutable. Vertices are the integers ``0..n-1``; edges
and hyperedges are stored as sorted tuples and the collections themselves
are kept in sorted order, so two equal objects always serialize to the
same JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence


Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``0..n-1``."""

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        seen = set()
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"edge {e!r} is not a pair")
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e!r} out of range for n={self.n}")
            pair = _norm_edge(u, v)
            if pair in seen:
                raise ValueError(f"duplicate edge {pair}")
            seen.add(pair)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, tuple(tuple(e) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def adjacency_masks(self) -> list[int]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self._edge_set

    @property
    def _edge_set(self) -> frozenset[Edge]:
        # cached lazily; frozen dataclass so go through object.__setattr__
        try:
            return self.__dict__["_es"]
        except KeyError:
            es = frozenset(self.edges)
            object.__setattr__(self, "_es", es)
            return es

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "Graph":
        return cls.from_edges(int(data["n"]), data.get("edges", []))

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Hypergraph:
    """Hypergraph with a set of hyperedges, each of size at least 2.

    ``uniform`` is an optional tag; when set, every hyperedge must have
    exactly that many vertices.
    """

    n: int
    hyperedges: tuple[tuple[int, ...], ...] = ()
    uniform: int | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        seen = set()
        for h in self.hyperedges:
            he = tuple(sorted(int(v) for v in h))
            if len(set(he)) != len(he):
                raise ValueError(f"hyperedge {h!r} repeats a vertex")
            if len(he) < 2:
                raise ValueError(f"hyperedge {h!r} has fewer than 2 vertices")
            if he[0] < 0 or he[-1] >= self.n:
                raise ValueError(f"hyperedge {h!r} out of range for n={self.n}")
            if self.uniform is not None and len(he) != self.uniform:
                raise ValueError(f"hyperedge {h!r} breaks {self.uniform}-uniformity")
            if he in seen:
                raise ValueError(f"duplicate hyperedge {he}")
            seen.add(he)
        object.__setattr__(self, "hyperedges", tuple(sorted(seen)))

    @classmethod
    def from_sets(cls, n: int, hyperedges: Iterable[Iterable[int]],
                  uniform: int | None = None) -> "Hypergraph":
        return cls(n, tuple(tuple(h) for h in hyperedges), uniform)

    def __len__(self) -> int:
        return len(self.hyperedges)

    def pair_index(self) -> dict[Edge, list[int]]:
        """Map each shadow edge to the (ascending) indices of hyperedges containing it."""
        index: dict[Edge, list[int]] = {}
        for i, h in enumerate(self.hyperedges):
            for pair in combinations(h, 2):
                index.setdefault(pair, []).append(i)
        return index

    def to_dict(self) -> dict:
        return {"n": self.n, "uniform": self.uniform,
                "hyperedges": [list(h) for h in self.hyperedges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "Hypergraph":
        uniform = data.get("uniform")
        return cls.from_sets(int(data["n"]), data.get("hyperedges", []),
                             None if uniform is None else int(uniform))

    @classmethod
    def from_json(cls, text: str) -> "Hypergraph":
        return cls.from_dict(json.loads(text))

    @classmethod
    def from_graph(cls, g: Graph) -> "Hypergraph":
        return cls(g.n, g.edges, 2)


@dataclass(frozen=True)
class VertexPartition:
    """Partition of ``0..n-1`` into nonempty blocks.

    Blocks are stored sorted internally and ordered by their smallest element.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = [tuple(sorted(int(v) for v in b)) for b in self.blocks]
        covered: list[int] = []
        for b in blocks:
            if not b:
                raise ValueError("empty block in partition")
            covered.extend(b)
        if sorted(covered) != list(range(self.n)):
            raise ValueError(f"blocks do not partition range({self.n})")
        object.__setattr__(self, "blocks", tuple(sorted(blocks)))

    @classmethod
    def singletons(cls, n: int) -> "VertexPartition":
        return cls(n, tuple((v,) for v in range(n)))

    def block_of(self) -> list[int]:
        owner = [0] * self.n
        for i, b in enumerate(self.blocks):
            for v in b:
                owner[v] = i
        return owner

    def to_list(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]


def shadow(h: Hypergraph) -> Graph:
    """2-shadow: every pair of vertices lying together in some hyperedge."""
    pairs = set()
    for he in h.hyperedges:
        pairs.update(combinations(he, 2))
    return Graph(h.n, tuple(pairs))


def is_linear(h: Hypergraph) -> bool:
    """True iff any two distinct hyperedges share at most one vertex."""
    seen: set[Edge] = set()
    for he in h.hyperedges:
        for pair in combinations(he, 2):
            if pair in seen:
                return False
            seen.add(pair)
    return True


@dataclass(frozen=True)
class Blowup:
    hypergraph: Hypergraph
    vertex_origin: tuple[int, ...]
    hyperedge_origin: tuple[int, ...]
    copies: tuple[tuple[int, ...], ...] = field(repr=False, default=())


def blowup(h: Hypergraph, factors: int | Sequence[int] | Mapping[int, int]) -> Blowup:
    """Replace vertex ``u`` by ``factors[u]`` fresh vertices.

    Copies of ``u`` get consecutive labels, and vertices keep their relative
    order, so the all-ones blowup is the identity. Each hyperedge becomes
    the union of the copy-sets of its vertices. The result is tagged
    ``r``-uniform when every new hyperedge has the same size ``r``.
    """
    if isinstance(factors, int):
        w = [factors] * h.n
    elif isinstance(factors, Mapping):
        w = [int(factors.get(u, 1)) for u in range(h.n)]
    else:
        w = [int(f) for f in factors]
        if len(w) != h.n:
            raise ValueError(f"expected {h.n} factors, got {len(w)}")
    for u, f in enumerate(w):
        if f < 1:
            raise ValueError(f"blowup factor {f} for vertex {u} must be positive")

    copies = []
    origin = []
    nxt = 0
    for u, f in enumerate(w):
        copies.append(tuple(range(nxt, nxt + f)))
        origin.extend([u] * f)
        nxt += f

    new_edges = []
    for he in h.hyperedges:
        new_edges.append(tuple(v for u in he for v in copies[u]))
    sizes = {len(e) for e in new_edges}
    uniform = sizes.pop() if len(sizes) == 1 else None
    hb = Hypergraph(nxt, tuple(new_edges), uniform)
    # hyperedges of h are sorted and blowup preserves vertex order, so the
    # sorted order of the new hyperedges matches; recompute to be safe
    pos = {e: i for i, e in enumerate(hb.hyperedges)}
    edge_origin = [0] * len(hb)
    for i, e in enumerate(new_edges):
        edge_origin[pos[tuple(sorted(e))]] = i
    return Blowup(hb, tuple(origin), tuple(edge_origin), tuple(copies))


def contract(g: Graph, partition: VertexPartition) -> Graph:
    """Merge each block to one vertex; block ``i`` becomes vertex ``i``.

    Two blocks are adjacent iff some edge of ``g`` runs between them;
    edges inside a block disappear.
    """
    if partition.n != g.n:
        raise ValueError(f"partition covers {partition.n} vertices, graph has {g.n}")
    owner = partition.block_of()
    edges = {_norm_edge(owner[u], owner[v]) for u, v in g.edges if owner[u] != owner[v]}
    return Graph(len(partition.blocks), tuple(edges))


def with_isolated(h: Hypergraph, n: int) -> Hypergraph:
    """Pad ``h`` with isolated vertices up to ``n`` vertices."""
    if n < h.n:
        raise ValueError(f"cannot shrink {h.n} vertices to {n}")
    return Hypergraph(n, h.hyperedges, h.uniform)
