"""Isomorphism-free enumeration of small trees and connected graphs."""

from __future__ import annotations

import heapq
import itertools
from functools import lru_cache
from typing import Iterator

from .canon import canonical_code, canonical_graph
from .graph import Graph, GraphError, graph_from_edge_list

TREE_CAP = 10
CONNECTED_CAP = 7


def prufer_decode(seq: tuple[int, ...], n: int) -> Graph:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    pairs = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        pairs.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    pairs.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return graph_from_edge_list(n, pairs)


def tree_signature(t: Graph) -> str:
    """AHU string of a tree rooted at its centre(s); equal iff isomorphic."""
    n = t.n
    if n <= 2:
        return str(n)
    adj = t.adjacency
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    centres = layer

    def encode(v: int, parent: int) -> str:
        return "(" + "".join(sorted(encode(w, v) for w in adj[v] if w != parent)) + ")"

    return min(encode(c, -1) for c in centres)


def trees_by_prufer(n: int) -> list[Graph]:
    """All labelled trees via Prüfer sequences, deduplicated by centre-rooted AHU strings."""
    if n == 1:
        return [Graph(1, ())]
    if n == 2:
        return [graph_from_edge_list(2, [(0, 1)])]
    found: dict[str, Graph] = {}
    for seq in itertools.product(range(n), repeat=n - 2):
        t = prufer_decode(seq, n)
        key = tree_signature(t)
        if key not in found:
            found[key] = t
    return _ordered({canonical_code(t): canonical_graph(t) for t in found.values()})


def rooted_level_sequences(n: int) -> Iterator[list[int]]:
    """Canonical level sequences of rooted trees on ``n`` vertices (root at level 0)."""
    if n < 1:
        return
    seq = list(range(n))
    while True:
        yield list(seq)
        p = next((i for i in range(n - 1, 0, -1) if seq[i] > 1), None)
        if p is None:
            return
        q = next(i for i in range(p - 1, -1, -1) if seq[i] == seq[p] - 1)
        for i in range(p, n):
            seq[i] = seq[i - (p - q)]


def tree_from_levels(levels: list[int]) -> Graph:
    last_at: dict[int, int] = {}
    pairs = []
    for i, lev in enumerate(levels):
        if lev > 0:
            pairs.append((last_at[lev - 1], i))
        last_at[lev] = i
    return graph_from_edge_list(len(levels), pairs)


def trees_by_level_sequences(n: int) -> list[Graph]:
    """Free trees from rooted level sequences, deduplicated by canonical form."""
    found: dict[tuple[int, int], Graph] = {}
    for levels in rooted_level_sequences(n):
        t = tree_from_levels(levels)
        key = canonical_code(t)
        if key not in found:
            found[key] = canonical_graph(t)
    return _ordered(found)


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    """Every graph on ``n`` vertices up to isomorphism, by one-vertex extension."""
    if n == 0:
        return (Graph(0, ()),)
    found: dict[tuple[int, int], Graph] = {}
    for base in _all_graphs(n - 1):
        for r in range(n):
            for subset in itertools.combinations(range(n - 1), r):
                g = Graph(n, base.edges).add_edges((v, n - 1) for v in subset)
                key = canonical_code(g)
                if key not in found:
                    found[key] = canonical_graph(g)
    return tuple(_ordered(found))


def _ordered(found: dict[tuple[int, int], Graph]) -> list[Graph]:
    return [found[k] for k in sorted(found, key=lambda k: (found[k].m, k[1]))]


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    return tuple(trees_by_level_sequences(n))


def enumerate_graphs(kind: str, n: int, cap: int | None = None) -> Iterator[Graph]:
    """Yield pairwise non-isomorphic graphs of one kind and order.

    ``kind`` is ``"trees"`` or ``"connected"``.  Output is in a fixed order
    (edge count, then canonical code) and every graph is in canonical labelling.
    """
    if kind == "trees":
        limit = TREE_CAP if cap is None else cap
    elif kind == "connected":
        limit = CONNECTED_CAP if cap is None else cap
    else:
        raise GraphError(f"unknown graph kind {kind!r}")
    if n < 1:
        raise GraphError("order must be positive")
    if n > limit:
        raise GraphError(f"order {n} exceeds enumeration cap {limit} for {kind}")
    if kind == "trees":
        yield from _trees(n)
    else:
        yield from (g for g in _all_graphs(n) if g.is_connected())
