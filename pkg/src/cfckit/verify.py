"""Conflict-free paths, witness search and certificate checking."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .graph import Edge, Graph, GraphError, require_connected

DEFAULT_PATH_BUDGET = 10**6


class ResourceExceeded(RuntimeError):
    """A bounded search ran past its configured budget."""


@dataclass(frozen=True)
class EdgeColoring:
    """Colours ``1..k`` on the edges of ``graph``, aligned with ``graph.edges``.

    Every colour in ``1..k`` is used; :meth:`from_mapping` compresses gaps
    while keeping the relative order of colours.
    """

    graph: Graph
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.colors) != self.graph.m:
            raise GraphError("coloring must assign a colour to every edge")
        used = set(self.colors)
        if used and used != set(range(1, max(used) + 1)):
            raise GraphError("colours must be exactly 1..k")

    @classmethod
    def from_mapping(cls, g: Graph, mapping: Mapping[Edge, int]) -> "EdgeColoring":
        raw = []
        for e in g.edges:
            if e not in mapping:
                raise GraphError(f"edge {e} has no colour")
            raw.append(mapping[e])
        return cls.from_sequence(g, raw)

    @classmethod
    def from_sequence(cls, g: Graph, raw: Sequence[int]) -> "EdgeColoring":
        if len(raw) != g.m:
            raise GraphError("coloring must assign a colour to every edge")
        rank = {c: i + 1 for i, c in enumerate(sorted(set(raw)))}
        return cls(g, tuple(rank[c] for c in raw))

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    def color_of(self, u: int, v: int) -> int:
        return self.colors[self.graph.index_of(u, v)]

    def as_mapping(self) -> dict[Edge, int]:
        return dict(zip(self.graph.edges, self.colors))


def path_is_conflict_free(coloring: EdgeColoring, path: Sequence[int]) -> int | None:
    """Smallest colour used exactly once along ``path``, or ``None``."""
    g = coloring.graph
    if len(path) < 2:
        raise GraphError("a path needs at least two vertices")
    if len(set(path)) != len(path):
        raise GraphError("path repeats a vertex")
    counts: dict[int, int] = {}
    for a, b in zip(path, path[1:]):
        c = coloring.color_of(a, b)
        counts[c] = counts.get(c, 0) + 1
    unique = [c for c, k in counts.items() if k == 1]
    return min(unique) if unique else None


def find_witness(
    g: Graph,
    coloring: EdgeColoring,
    u: int,
    v: int,
    cap: int | None = None,
    budget: int = DEFAULT_PATH_BUDGET,
) -> tuple[tuple[int, ...], int] | None:
    """First conflict-free ``u``-``v`` path in DFS order (neighbours ascending).

    ``cap`` bounds the number of edges (default ``n - 1``); ``budget`` bounds
    the number of partial paths explored.
    """
    if u == v:
        raise GraphError("witness endpoints must differ")
    cap = g.n - 1 if cap is None else cap
    adj = [sorted(a) for a in g.adjacency]
    color = {e: c for e, c in zip(g.edges, coloring.colors)}
    counts = [0] * (coloring.k + 2)
    path = [u]
    on_path = [False] * g.n
    on_path[u] = True
    explored = 0

    def unique_color() -> int | None:
        for c in range(1, len(counts)):
            if counts[c] == 1:
                return c
        return None

    def dfs(x: int) -> tuple[tuple[int, ...], int] | None:
        nonlocal explored
        for y in adj[x]:
            if on_path[y]:
                continue
            explored += 1
            if explored > budget:
                raise ResourceExceeded(f"witness search for ({u}, {v}) exceeded {budget} paths")
            c = color[(x, y) if x < y else (y, x)]
            counts[c] += 1
            path.append(y)
            if y == v:
                found = unique_color()
                if found is not None:
                    return tuple(path), found
            elif len(path) - 1 < cap:
                on_path[y] = True
                hit = dfs(y)
                on_path[y] = False
                if hit is not None:
                    return hit
            path.pop()
            counts[c] -= 1
        return None

    return dfs(u)


@dataclass(frozen=True)
class CfcCertificate:
    """A coloring plus one conflict-free witness path per vertex pair."""

    coloring: EdgeColoring
    witnesses: dict[tuple[int, int], tuple[tuple[int, ...], int]]

    ok = True

    def check(self) -> bool:
        """Re-check every witness from scratch."""
        g = self.coloring.graph
        if set(self.witnesses) != {(a, b) for a in range(g.n) for b in range(a + 1, g.n)}:
            return False
        for (a, b), (p, c) in self.witnesses.items():
            if p[0] != a or p[-1] != b:
                return False
            try:
                if any(not g.has_edge(x, y) for x, y in zip(p, p[1:])):
                    return False
                counts = [self.coloring.color_of(x, y) for x, y in zip(p, p[1:])]
            except GraphError:
                return False
            if len(set(p)) != len(p) or counts.count(c) != 1:
                return False
        return True


@dataclass(frozen=True)
class FailedPair:
    """The lexicographically first pair without a conflict-free path."""

    coloring: EdgeColoring
    pair: tuple[int, int]

    ok = False


def verify(
    g: Graph,
    coloring: EdgeColoring,
    cap: int | None = None,
    budget: int = DEFAULT_PATH_BUDGET,
) -> CfcCertificate | FailedPair:
    require_connected(g)
    if coloring.graph != g:
        raise GraphError("coloring belongs to a different graph")
    witnesses = {}
    for a in range(g.n):
        for b in range(a + 1, g.n):
            hit = find_witness(g, coloring, a, b, cap=cap, budget=budget)
            if hit is None:
                return FailedPair(coloring, (a, b))
            witnesses[(a, b)] = hit
    return CfcCertificate(coloring, witnesses)


def is_conflict_free_connected(g: Graph, coloring: EdgeColoring) -> bool:
    return verify(g, coloring).ok
