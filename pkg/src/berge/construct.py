"""Generators for the extremal constructions.

Each generator returns a :class:`Construction`: the hypergraph plus the
claims it is supposed to satisfy (uniformity, linearity, hyperedge count
and the named patterns it is Berge-free of). :func:`verify_claims` checks
those claims with the detector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from . import patterns
from .core import Graph, Hypergraph, blowup, is_linear, shadow, with_isolated
from .detect import contains_berge
from .embed import contains_subgraph
from .invariants import chromatic_number, clique_number, two_colouring

# patterns small enough to be checked against every construction
CLAIM_CATALOG = tuple(name for name in patterns.BUILTIN_NAMES if patterns.by_name(name).n <= 7)


@dataclass(frozen=True)
class Claims:
    linear: bool
    uniform: int
    free_of: tuple[str, ...]
    count_formula: int

    def to_dict(self) -> dict:
        return {"linear": self.linear, "uniform": self.uniform,
                "free_of": list(self.free_of), "count_formula": self.count_formula}


@dataclass(frozen=True)
class Construction:
    name: str
    params: dict
    hypergraph: Hypergraph
    claims: Claims
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        out = self.hypergraph.to_dict()
        out["construction"] = {"name": self.name, "params": self.params}
        out["claims"] = self.claims.to_dict()
        return out


@lru_cache(maxsize=None)
def _chi(name: str) -> int:
    return chromatic_number(patterns.by_name(name))


@lru_cache(maxsize=None)
def _omega(name: str) -> int:
    return clique_number(patterns.by_name(name))


@lru_cache(maxsize=None)
def _min_contracted(name: str, t: int) -> int | None:
    from .bounds import min_contracted_chromatic
    g = patterns.by_name(name)
    if not 1 <= t <= g.n - 1:
        return None
    return min_contracted_chromatic(g, t)


def _chromatic_above(r: int) -> tuple[str, ...]:
    return tuple(p for p in CLAIM_CATALOG if _chi(p) > r)


def linear_count(n: int, r: int) -> int:
    return (n // (2 * r)) * (n // (2 * r * (r - 1)) + 1)


def linear_construction(n: int, r: int) -> Construction:
    """r-uniform linear hypergraph with ~n^2 hyperedges and an r-partite shadow.

    Classes V_1..V_r hold ``n // r`` vertices each, vertex ``v_{i,j}`` is
    labelled ``(i-1)*(n//r) + (j-1)``, and the hyperedges are
    ``{v_{1,x}, v_{2,x+m}, ..., v_{r,x+(r-1)m}}`` for
    ``1 <= x <= n // (2r)`` and ``0 <= m <= n // (2r(r-1))``.
    Leftover vertices stay isolated.
    """
    if r < 2:
        raise ValueError("uniformity must be at least 2")
    if n < 2 * r:
        raise ValueError(f"need n >= 2r, got n={n}, r={r}")
    size = n // r
    hyperedges = []
    for x in range(1, n // (2 * r) + 1):
        for m in range(0, n // (2 * r * (r - 1)) + 1):
            hyperedges.append(tuple((i - 1) * size + (x + (i - 1) * m - 1) for i in range(1, r + 1)))
    h = Hypergraph(n, tuple(hyperedges), r)
    claims = Claims(True, r, _chromatic_above(r), linear_count(n, r))
    return Construction("linear", {"n": n, "r": r}, h, claims)


def _balanced(total: int, parts: int) -> list[int]:
    q, rem = divmod(total, parts)
    return [q + 1] * rem + [q] * (parts - rem)


def _classwise_blowup(n: int, k: int, r: int, factors, max_factor: int) -> tuple[Hypergraph, list[int], int]:
    """Blow up class i of the k-uniform linear construction by factors[i]."""
    w = list(factors) if factors is not None else _balanced(r, k)
    if len(w) != k:
        raise ValueError(f"expected {k} class factors, got {len(w)}")
    if any(not 1 <= f <= max_factor for f in w):
        raise ValueError(f"class factors must lie in [1, {max_factor}], got {w}")
    if sum(w) != r:
        raise ValueError(f"class factors {w} do not sum to r={r}")
    size = n // r
    if size < 2:
        raise ValueError(f"need n >= 2r, got n={n}, r={r}")
    base = linear_construction(k * size, k).hypergraph
    per_vertex = [w[v // size] for v in range(base.n)]
    blown = blowup(base, per_vertex).hypergraph
    return with_isolated(blown, n), w, linear_count(k * size, k)


def clique_blowup_construction(n: int, s: int, r: int, factors=None) -> Construction:
    """r-uniform Berge-K_s-free hypergraph for 2 <= r <= (s-1)^2.

    For r <= s-1 this is the r-uniform linear construction. Otherwise the
    (s-1)-uniform linear construction on (s-1)*(n//r) vertices has its
    classes blown up by factors in [1, s-1] summing to r (default: as
    equal as possible, larger factors first); the result is padded with
    isolated vertices up to n.
    """
    if s < 3:
        raise ValueError("s must be at least 3")
    if not 2 <= r <= (s - 1) ** 2:
        raise ValueError(f"r={r} outside [2, {(s - 1) ** 2}]")
    params = {"n": n, "s": s, "r": r}
    free = tuple(p for p in CLAIM_CATALOG if _omega(p) >= s)
    if r <= s - 1:
        if factors is not None and list(factors) != [1] * r:
            raise ValueError("factors are only meaningful when r > s-1")
        base = linear_construction(n, r)
        return Construction("clique_blowup", params, base.hypergraph,
                            Claims(True, r, free, base.claims.count_formula))
    h, w, count = _classwise_blowup(n, s - 1, r, factors, s - 1)
    params["factors"] = w
    return Construction("clique_blowup", params, h, Claims(False, r, free, count))


def admissible_blowup_construction(n: int, c: int, t: int, r: int, factors=None) -> Construction:
    """r-uniform hypergraph free of every Berge-F whose t-admissible contractions
    all have chromatic number at least c.

    For r < c this is the r-uniform linear construction; otherwise the
    (c-1)-uniform linear construction with class factors in [1, t].
    """
    if c < 3:
        raise ValueError("c must be at least 3")
    if t < 1:
        raise ValueError("t must be at least 1")
    if not 2 <= r <= (c - 1) * t:
        raise ValueError(f"r={r} outside [2, {(c - 1) * t}]")
    params = {"n": n, "c": c, "t": t, "r": r}
    if r < c:
        if factors is not None and list(factors) != [1] * r:
            raise ValueError("factors are only meaningful when r >= c")
        base = linear_construction(n, r)
        return Construction("admissible_blowup", params, base.hypergraph, base.claims)
    free = tuple(p for p in CLAIM_CATALOG
                 if (_min_contracted(p, t) or 0) >= c)
    h, w, count = _classwise_blowup(n, c - 1, r, factors, t)
    params["factors"] = w
    return Construction("admissible_blowup", params, h, Claims(False, r, free, count))


def rpartite_construction(n: int, r: int) -> Construction:
    """All transversals of r parts of size n // r: the cliques of a complete
    r-partite graph, one hyperedge each."""
    if r < 2:
        raise ValueError("r must be at least 2")
    if n < r:
        raise ValueError(f"need n >= r, got n={n}, r={r}")
    size = n // r
    parts = [range(i * size, (i + 1) * size) for i in range(r)]
    h = Hypergraph(n, tuple(product(*parts)), r)
    return Construction("rpartite", {"n": n, "r": r}, h,
                        Claims(r == 2 or size <= 1, r, _chromatic_above(r), size ** r))


# GF(4) = {0, 1, a, a+1} encoded as 0..3 (bit i = coefficient of a^i), a^2 = a + 1
_GF4_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)

SUPPORTED_ORDERS = (2, 3, 4, 5, 7)


def _field(q: int):
    if q == 4:
        return (lambda a, b: a ^ b), (lambda a, b: _GF4_MUL[a][b])
    return (lambda a, b: (a + b) % q), (lambda a, b: (a * b) % q)


def _projective_points(q: int) -> list[tuple[int, int, int]]:
    pts = [(1, a, b) for a in range(q) for b in range(q)]
    pts += [(0, 1, b) for b in range(q)]
    pts.append((0, 0, 1))
    return pts


def projective_incidence_graph(q: int) -> Graph:
    """Point-line incidence graph of PG(2, q).

    Points are vertices ``0..N-1`` and lines ``N..2N-1`` with
    ``N = q^2 + q + 1``; a point lies on a line when their coordinate
    vectors have zero dot product.
    """
    if q not in SUPPORTED_ORDERS:
        raise ValueError(f"unsupported order q={q}; choose from {SUPPORTED_ORDERS}")
    add, mul = _field(q)
    pts = _projective_points(q)
    big = len(pts)
    edges = []
    for i, p in enumerate(pts):
        for j, line in enumerate(pts):
            dot = add(add(mul(p[0], line[0]), mul(p[1], line[1])), mul(p[2], line[2]))
            if dot == 0:
                edges.append((i, big + j))
    return Graph(2 * big, tuple(edges))


def has_c4(g: Graph) -> bool:
    """A (non-induced) 4-cycle exists iff two vertices share two neighbours."""
    masks = g.adjacency_masks()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (masks[u] & masks[v]).bit_count() >= 2:
                return True
    return False


def c4_construction(base: Graph, i: int, j: int) -> Construction:
    """(i+j)-uniform Berge-C4-free hypergraph from a bipartite C4-free graph.

    Each vertex on side A (the side holding the smallest vertex of its
    component) becomes i copies, each vertex on side B becomes j copies,
    and each edge ab becomes the set of all copies of a and b.
    """
    if not (1 <= i <= 3 and 1 <= j <= 3):
        raise ValueError(f"i and j must lie in [1, 3], got i={i}, j={j}")
    side = two_colouring(base)
    if side is None:
        raise ValueError("base graph is not bipartite")
    if has_c4(base):
        raise ValueError("base graph contains a C4")
    factors = [i if s == 0 else j for s in side]
    h = blowup(Hypergraph.from_graph(base), factors).hypergraph
    if h.uniform is None:
        h = Hypergraph(h.n, h.hyperedges, i + j)
    c4 = patterns.cycle(4)
    free = tuple(p for p in CLAIM_CATALOG
                 if patterns.by_name(p).n >= 4 and contains_subgraph(patterns.by_name(p), c4))
    return Construction("c4", {"i": i, "j": j, "base_n": base.n, "base_m": base.m}, h,
                        Claims(i == 1 and j == 1, i + j, free, base.m))


def verify_claims(cons: Construction, node_limit: int | None = None) -> dict[str, bool]:
    """Check every claim with the detector; returns claim -> holds."""
    h = cons.hypergraph
    out = {
        "uniform": all(len(e) == cons.claims.uniform for e in h.hyperedges),
        "count_formula": len(h) == cons.claims.count_formula,
    }
    if cons.claims.linear:
        out["linear"] = is_linear(h)
    for name in cons.claims.free_of:
        out[f"free_of:{name}"] = contains_berge(h, patterns.by_name(name), node_limit) is None
    return out


def shadow_clique_number(cons: Construction) -> int:
    return clique_number(shadow(cons.hypergraph))
