"""Canonical labelling for small graphs.

The canonical code of a graph is the minimum upper-triangle adjacency
bit-string over all vertex orders that are consistent with an
isomorphism-invariant ordered partition.  The partition comes from
degree refinement to an equitable partition; non-singleton cells are
split by individualising one vertex at a time.  Twin vertices (same
neighbourhood apart from each other) are interchangeable, so only one
twin per cell is ever individualised.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, graph_from_edge_list

Cells = tuple[tuple[int, ...], ...]


def _refine(adj: tuple[frozenset[int], ...], cells: Cells) -> Cells:
    """Split cells by neighbour counts into other cells until stable."""
    while True:
        where = {}
        for i, cell in enumerate(cells):
            for v in cell:
                where[v] = i
        new: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in adj[v]:
                    counts[where[w]] += 1
                sig[v] = tuple(counts)
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                new.append(cell)
                continue
            changed = True
            for k in keys:
                new.append(tuple(v for v in cell if sig[v] == k))
        cells = tuple(new)
        if not changed:
            return cells


def _code(g: Graph, order: list[int]) -> int:
    n = g.n
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    top = n * (n - 1) // 2 - 1
    bits = 0
    for u, v in g.edges:
        a, b = pos[u], pos[v]
        if a > b:
            a, b = b, a
        # pairs listed row-major over the upper triangle, first pair most significant
        bits |= 1 << (top - (a * n - a * (a + 1) // 2 + b - a - 1))
    return bits


def _twin_classes(g: Graph) -> list[int]:
    """Representative index for each vertex's twin class."""
    adj = g.adjacency
    rep = list(range(g.n))
    for u in range(g.n):
        if rep[u] != u:
            continue
        for v in range(u + 1, g.n):
            if rep[v] == v and adj[u] - {v} == adj[v] - {u}:
                rep[v] = u
    return rep


def canonical_order(g: Graph) -> tuple[int, ...]:
    """Vertex order achieving the canonical code (``order[i]`` = old vertex at slot ``i``)."""
    return _canon(g)[1]


def canonical_code(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key ``(n, code)``."""
    return (g.n, _canon(g)[0])


@lru_cache(maxsize=200_000)
def _canon(g: Graph) -> tuple[int, tuple[int, ...]]:
    if g.n == 0:
        return (0, ())
    adj = g.adjacency
    twin = _twin_classes(g)
    start = _refine(adj, (tuple(range(g.n)),))
    best: list = [None, None]

    def search(cells: Cells) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(g, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, tuple(order)
            return
        cell = cells[target]
        tried: set[int] = set()
        for v in cell:
            if twin[v] in tried:
                continue
            tried.add(twin[v])
            rest = tuple(w for w in cell if w != v)
            split = cells[:target] + ((v,), rest) + cells[target + 1 :]
            search(_refine(adj, split))

    search(start)
    return best[0], best[1]


def canonical_graph(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return graph_from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and sorted(g.degrees) == sorted(h.degrees) and canonical_code(g) == canonical_code(h)
