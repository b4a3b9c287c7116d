"""Bridges, blocks, the cut-edge forest C(G) and the one-edge-per-block matching."""

from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_code
from .graph import Edge, Graph, require_connected


def _dfs_lowlink(g: Graph):
    """Iterative DFS yielding discovery order, low-link values and the edge stack blocks."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    bridges: set[Edge] = set()
    blocks: list[list[Edge]] = []
    cut_vertices: set[int] = set()
    counter = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        edge_stack: list[Edge] = []
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((min(v, w), max(v, w)))
                    stack.append((w, v, iter(g.neighbors(w))))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    low[v] = min(low[v], disc[w])
                    edge_stack.append((min(v, w), max(v, w)))
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] > disc[parent]:
                bridges.add((min(v, parent), max(v, parent)))
            if low[v] >= disc[parent]:
                if parent != root:
                    cut_vertices.add(parent)
                top = (min(v, parent), max(v, parent))
                block = []
                while True:
                    e = edge_stack.pop()
                    block.append(e)
                    if e == top:
                        break
                blocks.append(sorted(block))
        if root_children > 1:
            cut_vertices.add(root)
    return bridges, blocks, cut_vertices


def bridges(g: Graph) -> frozenset[Edge]:
    """Edges whose removal disconnects their component (low-link DFS)."""
    return frozenset(_dfs_lowlink(g)[0])


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[Edge, ...], ...]
    cut_vertices: frozenset[int]

    @property
    def nontrivial_blocks(self) -> tuple[tuple[Edge, ...], ...]:
        return tuple(b for b in self.blocks if len(b) > 1)

    @property
    def r(self) -> int:
        return len(self.nontrivial_blocks)


def block_vertices(block: tuple[Edge, ...]) -> frozenset[int]:
    return frozenset(v for e in block for v in e)


def decompose(g: Graph) -> BlockDecomposition:
    require_connected(g)
    _, blocks, cuts = _dfs_lowlink(g)
    return BlockDecomposition(tuple(sorted(tuple(b) for b in blocks)), frozenset(cuts))


@dataclass(frozen=True)
class CutEdgeForest:
    """Components T_1..T_s of C(G), largest first.

    ``embeddings[i][j]`` is the parent-graph vertex of vertex ``j`` of
    ``components[i]``.
    """

    components: tuple[Graph, ...]
    embeddings: tuple[tuple[int, ...], ...]

    @property
    def s(self) -> int:
        return len(self.components)

    def parent_edges(self, i: int) -> list[Edge]:
        emb = self.embeddings[i]
        return sorted((min(emb[u], emb[v]), max(emb[u], emb[v])) for u, v in self.components[i].edges)


def cut_edge_forest(g: Graph) -> CutEdgeForest:
    require_connected(g)
    cut = sorted(bridges(g))
    adj: dict[int, list[int]] = {}
    for u, v in cut:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen: set[int] = set()
    parts = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    frontier.append(y)
        seen |= comp
        tree, emb = g.edge_subgraph([e for e in cut if e[0] in comp])
        parts.append((tree, tuple(emb)))
    parts.sort(key=lambda p: (-p[0].n, canonical_code(p[0])[1], p[1]))
    return CutEdgeForest(tuple(p[0] for p in parts), tuple(p[1] for p in parts))


def block_matching(g: Graph) -> frozenset[Edge]:
    """One edge from every nontrivial block, pairwise non-adjacent.

    Blocks are handled leaf-to-root in the block-cut tree rooted at the
    first block; each block takes its smallest edge that avoids its parent
    cut vertex and every endpoint already used.
    """
    dec = decompose(g)
    blocks = dec.blocks
    verts = [block_vertices(b) for b in blocks]
    # block-cut tree: BFS from block 0 alternating block -> cut vertex -> block
    parent_cut: dict[int, int | None] = {0: None}
    order = [0]
    i = 0
    while i < len(order):
        b = order[i]
        i += 1
        for c in sorted(verts[b] & dec.cut_vertices):
            if c == parent_cut[b]:
                continue
            for other in range(len(blocks)):
                if other not in parent_cut and c in verts[other]:
                    parent_cut[other] = c
                    order.append(other)
    chosen: list[Edge] = []
    used: set[int] = set()
    for b in reversed(order):
        block = blocks[b]
        if len(block) == 1:
            continue
        avoid = used | ({parent_cut[b]} if parent_cut[b] is not None else set())
        options = [e for e in block if e[0] not in avoid and e[1] not in avoid]
        if not options:
            options = [e for e in block if e[0] not in used and e[1] not in used]
        if not options:
            raise AssertionError(f"no matching edge available in block {block}")
        e = options[0]
        chosen.append(e)
        used.update(e)
    return frozenset(chosen)
