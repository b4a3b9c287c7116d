"""Immutable simple undirected graphs on vertices ``0..n-1``."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs or violated preconditions."""


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with a sorted, duplicate-free edge list.

    Build instances with :func:`graph_from_edge_list`; the constructor
    trusts its arguments.
    """

    n: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edge_index

    def index_of(self, u: int, v: int) -> int:
        try:
            return self.edge_index[_norm(u, v)]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not an edge") from None

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adjacency[v])

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(bfs_distances(self, 0)) == self.n

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def is_path(self) -> bool:
        return self.is_tree() and self.max_degree <= 2

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return ``(H, emb)`` where ``emb[i]`` is the parent vertex of H's vertex ``i``."""
        emb = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(emb)}
        pairs = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return graph_from_edge_list(len(emb), pairs), emb

    def edge_subgraph(self, edges: Iterable[Edge]) -> tuple["Graph", list[int]]:
        """Subgraph spanned by ``edges`` on their endpoints, relabelled compactly."""
        edges = [_norm(*e) for e in edges]
        emb = sorted({v for e in edges for v in e})
        pos = {v: i for i, v in enumerate(emb)}
        return graph_from_edge_list(len(emb), [(pos[u], pos[v]) for u, v in edges]), emb

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return graph_from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def add_edges(self, pairs: Iterable[Edge]) -> "Graph":
        return graph_from_edge_list(self.n, list(self.edges) + list(pairs))

    def remove_edges(self, pairs: Iterable[Edge]) -> "Graph":
        drop = {_norm(*p) for p in pairs}
        return Graph(self.n, tuple(e for e in self.edges if e not in drop))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def graph_from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a canonical :class:`Graph`; duplicate pairs collapse to one edge."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen: set[Edge] = set()
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        seen.add(_norm(u, v))
    return Graph(n, tuple(sorted(seen)))


def complement(g: Graph) -> Graph:
    return Graph(
        g.n,
        tuple((u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)),
    )


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in sorted(g.adjacency[u]):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


INFINITE = float("inf")


def diameter(g: Graph) -> float:
    """Largest BFS distance; ``inf`` for disconnected graphs."""
    best = 0
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if len(dist) < g.n:
            return INFINITE
        best = max(best, max(dist.values()))
    return best


@dataclass(frozen=True)
class Metrics:
    connected: bool
    complete: bool
    diameter: float
    degrees: tuple[int, ...]
    max_degree: int
    two_edge_connected: bool
    lambda_is_one: bool


def metrics(g: Graph) -> Metrics:
    from .decomposition import bridges

    connected = g.is_connected()
    nbridges = len(bridges(g))
    return Metrics(
        connected=connected,
        complete=g.is_complete(),
        diameter=diameter(g),
        degrees=g.degrees,
        max_degree=g.max_degree,
        two_edge_connected=connected and g.n >= 2 and nbridges == 0,
        lambda_is_one=connected and nbridges >= 1,
    )


def spanning_bfs_tree(g: Graph, root: int = 0) -> list[Edge]:
    """Edges of the breadth-first spanning tree, visiting neighbours in index order."""
    seen = {root}
    tree: list[Edge] = []
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in sorted(g.adjacency[u]):
            if w not in seen:
                seen.add(w)
                tree.append(_norm(u, w))
                queue.append(w)
    if len(seen) != g.n:
        raise GraphError("graph is disconnected")
    return tree


def require_connected(g: Graph) -> None:
    if g.n == 0 or not g.is_connected():
        raise GraphError("graph must be connected")
