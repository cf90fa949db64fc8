"""Lower and upper bounds on the uniformity threshold of a pattern graph.

The lower bounds come from constructions: the linear threshold (chromatic
number), the clique blowup ((omega-1)^2 + 1) and, for each block size t,
the admissible-partition blowup ((c_t - 1) t + 1 where c_t is the least
chromatic number over contractions of t-admissible partitions). The upper
bounds are the Ramsey number R(F, F - e) and, for bipartite F, |V(F)|.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import patterns
from .core import Graph, VertexPartition, contract
from .embed import ResourceExhausted, edge_orbits
from .invariants import (DEFAULT_RAMSEY_BUDGET, DEFAULT_RAMSEY_NMAX, chromatic_number,
                         clique_number, delete_edge, is_bipartite, ramsey_number)

TAG_CHI = "linear-threshold chromatic number"
TAG_OMEGA = "clique-blowup construction (omega-1)^2+1"
TAG_PARTITION = "admissible-partition blowup (c_t-1)t+1"
TAG_RAMSEY = "Ramsey bound R(F, F-e)"
TAG_BIPARTITE = "bipartite pattern |V(F)|"


class BoundMismatch(AssertionError):
    """The generic partition machinery disagrees with a closed-form bound."""


def enumerate_admissible_partitions(g: Graph, t: int) -> list[VertexPartition]:
    """All partitions of V(g) into blocks of size <= t with at most one edge
    between any two blocks.

    Restricted-growth enumeration over vertices in label order. Besides the
    block-size and edge-count checks, a branch is cut as soon as some block
    is forced to overflow: a vertex adjacent to two members of a block must
    join that block, so such vertices count against its size in advance,
    and a vertex forced into two blocks kills the branch.
    """
    n = g.n
    if not 1 <= t <= n - 1:
        raise ValueError(f"t={t} outside [1, {n - 1}]")
    adj = g.adjacency_masks()
    owner = [-1] * n
    blocks: list[int] = []
    between: dict[tuple[int, int], int] = {}
    out: list[VertexPartition] = []

    def consistent(v: int) -> bool:
        unplaced = ((1 << n) - 1) >> (v + 1) << (v + 1)
        claimed = 0
        for mask in blocks:
            forced = 0
            w_bits = unplaced
            while w_bits:
                low = w_bits & -w_bits
                w = low.bit_length() - 1
                w_bits ^= low
                if (adj[w] & mask).bit_count() >= 2:
                    forced |= low
            if forced & claimed:
                return False
            claimed |= forced
            if mask.bit_count() + forced.bit_count() > t:
                return False
        return True

    def rec(v: int) -> None:
        if v == n:
            groups = [[] for _ in blocks]
            for u in range(n):
                groups[owner[u]].append(u)
            out.append(VertexPartition(n, tuple(tuple(b) for b in groups)))
            return
        for b in range(len(blocks) + 1):
            if b == len(blocks):
                blocks.append(0)
            elif blocks[b].bit_count() >= t:
                continue
            touched = []
            ok = True
            nb = adj[v] & ((1 << v) - 1)
            while nb:
                low = nb & -nb
                u = low.bit_length() - 1
                nb ^= low
                if owner[u] == b:
                    continue
                key = (owner[u], b) if owner[u] < b else (b, owner[u])
                between[key] = between.get(key, 0) + 1
                touched.append(key)
                if between[key] > 1:
                    ok = False
            owner[v] = b
            blocks[b] |= 1 << v
            if ok and consistent(v):
                rec(v + 1)
            blocks[b] &= ~(1 << v)
            owner[v] = -1
            for key in touched:
                between[key] -= 1
                if not between[key]:
                    del between[key]
            if b == len(blocks) - 1 and blocks[b] == 0:
                blocks.pop()

    rec(0)
    return out


def _min_contracted(g: Graph, t: int) -> tuple[int, int, VertexPartition]:
    parts = enumerate_admissible_partitions(g, t)
    best, arg = None, None
    for p in parts:
        chi = chromatic_number(contract(g, p))
        if best is None or chi < best:
            best, arg = chi, p
    return best, len(parts), arg


def min_contracted_chromatic(g: Graph, t: int) -> int:
    """Least chromatic number over contractions of all t-admissible partitions."""
    return _min_contracted(g, t)[0]


@dataclass
class PartitionRow:
    t: int
    admissible_partition_count: int
    c_t: int
    bound_t: int | None
    witness: VertexPartition = field(repr=False, default=None)

    def to_dict(self) -> dict:
        return {"t": self.t, "admissible_partition_count": self.admissible_partition_count,
                "c_t": self.c_t, "bound_t": self.bound_t,
                "minimising_partition": self.witness.to_list() if self.witness else None}


@dataclass
class PartitionBoundReport:
    pattern: Graph
    rows: list[PartitionRow]
    omega: int
    omega_bound: int
    chi: int
    chi_bound: int
    ramsey: list[dict]
    ramsey_upper: int | None
    bipartite_upper: int | None
    final_lower: int
    final_upper: int | None
    lower_sources: list[str]
    upper_sources: list[str]

    def row(self, t: int) -> PartitionRow:
        return next(r for r in self.rows if r.t == t)

    def to_dict(self) -> dict:
        return {
            "pattern": self.pattern.to_dict(),
            "rows": [r.to_dict() for r in self.rows],
            "omega": self.omega,
            "omega_bound": {"value": self.omega_bound, "source": TAG_OMEGA},
            "chi": self.chi,
            "chi_bound": {"value": self.chi_bound, "source": TAG_CHI},
            "ramsey": self.ramsey,
            "ramsey_upper": {"value": self.ramsey_upper if self.ramsey_upper is not None else "unknown",
                             "source": TAG_RAMSEY},
            "bipartite_upper": {"value": self.bipartite_upper, "source": TAG_BIPARTITE},
            "final_lower": {"value": self.final_lower, "sources": self.lower_sources},
            "final_upper": {"value": self.final_upper if self.final_upper is not None else "unknown",
                            "sources": self.upper_sources},
            "note": "bounds refer to the least r0 such that ex_r(n,F) = o(n^2) for every r >= r0",
        }


def _row(g: Graph, t: int) -> PartitionRow:
    c, count, arg = _min_contracted(g, t)
    return PartitionRow(t, count, c, (c - 1) * t + 1 if c >= 3 else None, arg)


def _ramsey_rows(g: Graph, n_max: int, budget: int | None, threads: int) -> list[dict]:
    rows = []
    for orbit in edge_orbits(g):
        e = orbit[0]
        entry = {"edge": list(e), "orbit_size": len(orbit)}
        if g.n > n_max:
            entry.update(value="unknown", status=f"pattern larger than n_max={n_max}")
        else:
            try:
                res = ramsey_number(g, delete_edge(g, e), n_max, budget, threads)
            except ResourceExhausted as exc:
                entry.update(value="unknown", status=str(exc))
            else:
                if res.value is None:
                    entry.update(value="unknown", status=f"greater than {n_max}")
                else:
                    entry.update(value=res.value, status="exact")
                entry["nodes"] = {str(k): v for k, v in sorted(res.nodes.items())}
        rows.append(entry)
    return rows


def threshold_report(g: Graph, ramsey_nmax: int = DEFAULT_RAMSEY_NMAX,
                     ramsey_budget: int | None = DEFAULT_RAMSEY_BUDGET,
                     threads: int = 1) -> PartitionBoundReport:
    """Every bound on the uniformity threshold of ``g`` with its source."""
    if g.m == 0:
        raise ValueError("pattern needs at least one edge")
    ts = list(range(1, g.n))
    if threads > 1 and len(ts) > 1:
        with ProcessPoolExecutor(max_workers=min(threads, len(ts))) as pool:
            rows = list(pool.map(_row, [g] * len(ts), ts))
    else:
        rows = [_row(g, t) for t in ts]

    omega = clique_number(g)
    chi = chromatic_number(g)
    omega_bound = (omega - 1) ** 2 + 1

    if g.m >= 2:
        ramsey = _ramsey_rows(g, ramsey_nmax, ramsey_budget, threads)
        known = [r["value"] for r in ramsey if isinstance(r["value"], int)]
        ramsey_upper = min(known) if known else None
    else:
        ramsey, ramsey_upper = [], None
    bipartite_upper = g.n if is_bipartite(g) else None

    lowers = [(omega_bound, TAG_OMEGA), (chi, TAG_CHI)]
    lowers += [(r.bound_t, f"{TAG_PARTITION} at t={r.t}") for r in rows if r.bound_t is not None]
    final_lower = max(v for v, _ in lowers)
    uppers = [(v, tag) for v, tag in ((ramsey_upper, TAG_RAMSEY), (bipartite_upper, TAG_BIPARTITE))
              if v is not None]
    final_upper = min((v for v, _ in uppers), default=None)

    return PartitionBoundReport(
        pattern=g, rows=rows, omega=omega, omega_bound=omega_bound, chi=chi, chi_bound=chi,
        ramsey=ramsey, ramsey_upper=ramsey_upper, bipartite_upper=bipartite_upper,
        final_lower=final_lower, final_upper=final_upper,
        lower_sources=[tag for v, tag in lowers if v == final_lower],
        upper_sources=[tag for v, tag in uppers if v == final_upper],
    )


def format_report(rep: PartitionBoundReport) -> str:
    lines = [f"pattern: n={rep.pattern.n} m={rep.pattern.m}  omega={rep.omega}  chi={rep.chi}",
             f"{'t':>3} {'partitions':>11} {'c_t':>4} {'bound':>6}"]
    for r in rep.rows:
        bound = "-" if r.bound_t is None else str(r.bound_t)
        lines.append(f"{r.t:>3} {r.admissible_partition_count:>11} {r.c_t:>4} {bound:>6}")
    for e in rep.ramsey:
        lines.append(f"R(F, F-{tuple(e['edge'])}) = {e['value']}  [{e['status']}]")
    lines.append(f"omega bound   {rep.omega_bound}")
    lines.append(f"chi bound     {rep.chi_bound}")
    lines.append(f"bipartite     {rep.bipartite_upper if rep.bipartite_upper is not None else '-'}")
    upper = rep.final_upper if rep.final_upper is not None else "unknown"
    lines.append(f"threshold in  [{rep.final_lower}, {upper}]")
    return "\n".join(lines)


def linear_threshold(g: Graph) -> int:
    """The linear uniformity threshold, which equals the chromatic number."""
    if g.m == 0:
        raise ValueError("pattern needs at least one edge")
    return chromatic_number(g)


@dataclass
class BlowupBound:
    kind: str
    pattern: Graph
    t: int
    c: int
    value: int
    applies: bool
    note: str = ""

    def to_dict(self) -> dict:
        return {"kind": self.kind, "pattern": self.pattern.to_dict(), "t": self.t,
                "c": self.c, "value": self.value, "applies": self.applies, "note": self.note}


def _connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    adj = g.adjacency()
    seen = {0}
    stack = [0]
    while stack:
        for v in adj[stack.pop()]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == g.n


def blowup_bounds(kind: str, *, s: int | None = None, factors=None,
                     graph: Graph | None = None) -> BlowupBound:
    """Closed-form threshold bounds for graph blowups, recomputed generically.

    ``clique_blowup``: F is K_s with vertex i blown up by ``factors[i]``;
    bound (s-1)(|V(F)|-1)+1. ``connected_blowup``: F blows up a connected
    ``graph`` with ``factors[i] >= i+1`` and ``factors[0] >= 2``; bound
    (chi(F)-1)(|V(F)|-1)+1. Both are checked against (c-1)t+1 from the
    admissible-partition enumeration at t = |V(F)|-1; a disagreement raises
    ``BoundMismatch``. ``applies`` is False when c < 3, where the partition
    bound itself makes no claim.
    """
    if kind == "clique_blowup":
        if s is None or s < 3:
            raise ValueError("clique_blowup needs s >= 3")
        factors = list(factors) if factors is not None else [1] * s
        if len(factors) != s or any(f < 1 for f in factors):
            raise ValueError(f"need {s} positive factors, got {factors}")
        f = patterns.complete_multipartite(factors)
        closed = (s - 1) * (f.n - 1) + 1
        note = ""
    elif kind == "connected_blowup":
        if graph is None or not _connected(graph) or graph.m == 0:
            raise ValueError("connected_blowup needs a connected graph with an edge")
        factors = list(factors or [])
        if len(factors) != graph.n:
            raise ValueError(f"need {graph.n} factors, got {len(factors)}")
        if factors[0] < 2 or any(w < i + 1 for i, w in enumerate(factors)):
            raise ValueError(f"factors {factors} violate w(1) >= 2 and w(i) >= i")
        f = patterns.graph_blowup(graph, factors)
        closed = (chromatic_number(f) - 1) * (f.n - 1) + 1
        note = "bound is for the blowup F"
    else:
        raise ValueError(f"unknown blowup kind {kind!r}")

    t = f.n - 1
    c = min_contracted_chromatic(f, t)
    generic = (c - 1) * t + 1
    if generic != closed:
        raise BoundMismatch(f"{kind}: partition machinery gives {generic}, closed form {closed}")
    if kind == "connected_blowup" and c != chromatic_number(graph):
        raise BoundMismatch(f"c={c} differs from chi(G)={chromatic_number(graph)}")
    applies = c >= 3
    if not applies:
        note = (note + "; " if note else "") + "c < 3, the partition bound does not apply"
    return BlowupBound(kind, f, t, c, closed, applies, note)
