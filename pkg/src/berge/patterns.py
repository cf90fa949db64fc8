"""Named small graphs used as patterns.

Accepted names: ``K<n>`` (complete), ``P<n>`` (path on n vertices),
``C<n>`` (cycle), ``K<a>,<b>[,<c>...]`` (complete multipartite),
``K211`` (shorthand for K2,1,1) and ``Petersen``.
"""

from __future__ import annotations

import re
from itertools import combinations

from .core import Graph


def complete(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_multipartite(sizes) -> Graph:
    """Complete multipartite graph; part i occupies a consecutive label range."""
    parts = []
    start = 0
    for s in sizes:
        if s < 1:
            raise ValueError("part sizes must be positive")
        parts.append(range(start, start + s))
        start += s
    edges = [(u, v) for a, b in combinations(parts, 2) for u in a for v in b]
    return Graph(start, tuple(edges))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def graph_blowup(g: Graph, factors) -> Graph:
    """Graph blowup: vertex i becomes an independent set of factors[i] vertices,
    and copies of u, v are adjacent iff uv is an edge of g."""
    if len(factors) != g.n:
        raise ValueError(f"expected {g.n} factors, got {len(factors)}")
    copies = []
    nxt = 0
    for f in factors:
        if f < 1:
            raise ValueError("blowup factors must be positive")
        copies.append(range(nxt, nxt + f))
        nxt += f
    edges = [(a, b) for u, v in g.edges for a in copies[u] for b in copies[v]]
    return Graph(nxt, tuple(edges))


BUILTIN_NAMES = (
    ["K2", "K3", "K4", "K5", "K6", "P3", "P4", "C4", "C5", "C6", "K211", "Petersen"]
    + [f"K{s},{t}" for s in range(1, 5) for t in range(s, 5)]
)

_NAME = re.compile(r"^([KPC])(\d+(?:,\d+)*)$")


def by_name(name: str) -> Graph:
    if name.lower() == "petersen":
        return petersen()
    if name == "K211":
        return complete_multipartite([2, 1, 1])
    m = _NAME.match(name)
    if not m:
        raise ValueError(f"unknown pattern {name!r}")
    kind, nums = m.group(1), [int(x) for x in m.group(2).split(",")]
    if kind == "K":
        if len(nums) == 1:
            return complete(nums[0])
        return complete_multipartite(nums)
    if len(nums) != 1:
        raise ValueError(f"unknown pattern {name!r}")
    return path(nums[0]) if kind == "P" else cycle(nums[0])
