"""Closed-form colourings and theorem-based cfc prediction."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .canon import canonical_code
from .decomposition import block_matching, bridges, cut_edge_forest
from .families import complete, complete_bipartite, family, family_membership, path, plus_edge, star
from .graph import Graph, GraphError, complement, diameter, require_connected, spanning_bfs_tree
from .verify import EdgeColoring

__all__ = [
    "ClassificationResult",
    "classify",
    "color_general",
    "color_path",
    "color_spanning_tree",
    "color_two_edge_connected",
    "family_membership",
    "statement_n_minus_2",
    "statement_n_minus_3",
    "statement_n_minus_4",
]


def color_path(m: int) -> EdgeColoring:
    """Ruler colouring of the path 0-1-...-m: edge ``i`` (from 1) gets 1 + v2(i)."""
    if m < 1:
        raise GraphError("a path needs at least one edge")
    colors = [((i & -i).bit_length()) for i in range(1, m + 1)]
    return EdgeColoring(path(m + 1), tuple(colors))


def color_two_edge_connected(g: Graph) -> EdgeColoring:
    """Colour 2 on a one-edge-per-block matching, colour 1 elsewhere."""
    require_connected(g)
    if bridges(g) or g.is_complete() or g.n < 3:
        raise GraphError("expected a non-complete 2-edge-connected graph")
    chosen = block_matching(g)
    return EdgeColoring(g, tuple(2 if e in chosen else 1 for e in g.edges))


def color_spanning_tree(g: Graph) -> EdgeColoring:
    """Distinct colours on a BFS spanning tree, colour 1 on the remaining edges."""
    require_connected(g)
    tree = spanning_bfs_tree(g)
    rank = {e: i + 1 for i, e in enumerate(tree)}
    return EdgeColoring.from_sequence(g, [rank.get(e, 1) for e in g.edges])


def color_general(g: Graph, fresh: bool | None = None, budget: int | None = None) -> EdgeColoring:
    """Colour a graph with bridges from optimal colourings of the C(G) components.

    Each component T_i gets its own optimal colouring.  The block matching
    gets colour h when a single component attains h (and ``fresh`` is not
    forced), otherwise the new colour h+1.  Other block edges get colour 1.
    """
    from .solve import cfc_tree_exact

    require_connected(g)
    forest = cut_edge_forest(g)
    if forest.s == 0:
        raise GraphError("graph is 2-edge-connected; use color_two_edge_connected")
    mapping: dict[tuple[int, int], int] = {}
    values = []
    for tree, emb in zip(forest.components, forest.embeddings):
        res = cfc_tree_exact(tree, budget)
        values.append(res.value)
        for (u, v), c in zip(tree.edges, res.coloring.colors):
            a, b = emb[u], emb[v]
            mapping[(min(a, b), max(a, b))] = c
    h = max(values)
    unique = values.count(h) == 1 and h >= 2
    if fresh is None:
        fresh = not unique
    if not fresh and not unique:
        raise GraphError("the shared colour h needs a unique component attaining h >= 2")
    if len(mapping) < g.m:
        chosen = block_matching(g)
        special = h + 1 if fresh else h
        for e in g.edges:
            if e not in mapping:
                mapping[e] = special if e in chosen else 1
    return EdgeColoring.from_mapping(g, mapping)


# ---------------------------------------------------------------------------
# characterisations


@dataclass(frozen=True)
class ClassificationResult:
    predicted: int | None
    theorem: str
    family: str | None = None


@lru_cache(maxsize=None)
def _keys(n: int, names: tuple[str, ...]) -> frozenset[tuple[int, int]]:
    """Canonical codes of the named small graphs and figure sets at order ``n``."""
    from .figures import figure_keys

    named = {
        "K3": lambda: complete(3),
        "K13e": lambda: plus_edge(star(4)),
        "K22": lambda: complete_bipartite(2, 2),
        "K22e": lambda: plus_edge(complete_bipartite(2, 2)),
        "P5": lambda: path(5),
        "K4": lambda: complete(4),
        "P6": lambda: path(6),
        "K5": lambda: complete(5),
        "P7": lambda: path(7),
    }
    keys = set()
    for name in names:
        if name in named:
            keys.add(canonical_code(named[name]()))
        else:
            keys |= figure_keys(name)
    return frozenset(k for k in keys if k[0] == n)


def _is(g: Graph, *names: str) -> bool:
    return canonical_code(g) in _keys(g.n, names)


def _in_family(g: Graph, *tags: str) -> bool:
    key = canonical_code(g)
    for tag in tags:
        try:
            h = family(tag, g.n)
        except GraphError:
            continue
        if h.m == g.m and canonical_code(h) == key:
            return True
    return False


def is_star(g: Graph) -> bool:
    return g.n >= 2 and g.is_tree() and g.max_degree == g.n - 1


def statement_n_minus_2(g: Graph) -> bool:
    """Membership in the characterised class with cfc = n - 2 (n >= 3)."""
    n = g.n
    if n < 3:
        return False
    if g.is_tree() and g.max_degree == n - 2 and n >= 4:
        return True
    return _is(g, "K3", "K13e", "K22", "K22e", "P5")


def statement_n_minus_3(g: Graph) -> bool:
    """Membership in the characterised class with cfc = n - 3 (n >= 4)."""
    n = g.n
    if n < 4:
        return False
    if g.is_tree() and g.max_degree == n - 3 and n >= 6:
        return True
    if n >= 5 and _in_family(g, "star+e", "U"):
        return True
    if n == 5 and not bridges(g) and not g.is_complete():
        return True
    return _is(g, "K4", "P6", "G1-G5", "G6")


_FOURTEEN = tuple(f"U{i}" for i in range(1, 7)) + tuple(f"W{i}" for i in range(1, 9))


def statement_n_minus_4(g: Graph) -> bool:
    """Membership in the characterised class with cfc = n - 4 (n >= 5).

    The order-6 clause is taken literally (every non-complete graph with a
    cycle).  The figure set H13 is included alongside H1-H5, H11 and H12.
    """
    n = g.n
    if n < 5:
        return False
    if g.is_tree() and g.max_degree == n - 4 and n >= 7 and not _is(g, "G6"):
        return True
    if n >= 7 and _in_family(g, *_FOURTEEN):
        return True
    if n == 6 and not g.is_complete() and not g.is_tree():
        return True
    return _is(g, "K5", "P7", "H1-H5", "H11", "H12", "H13")


def cut_edges_per_vertex(g: Graph) -> int:
    br = bridges(g)
    count = [0] * g.n
    for u, v in br:
        count[u] += 1
        count[v] += 1
    return max(count, default=0)


def far_complement(g: Graph) -> bool:
    """Non-complete with a connected complement of diameter at least 3."""
    if g.is_complete():
        return False
    comp = complement(g)
    return comp.is_connected() and diameter(comp) >= 3


def classify(g: Graph) -> ClassificationResult:
    """Predict cfc from the first characterisation that applies.

    Precedence: complete, star, tree threshold, n-2 list, n-3 list, n-4
    list, 2-edge-connected, cut-edge condition under a far complement.
    """
    require_connected(g)
    if g.n < 2:
        raise GraphError("cfc is defined for graphs with at least two vertices")
    n = g.n
    fam = family_membership(g)
    if g.is_complete():
        return ClassificationResult(1, "complete", fam)
    if is_star(g):
        return ClassificationResult(n - 1, "star", fam)
    if g.is_tree():
        t = n - g.max_degree
        if n >= 2 * t + 2:
            return ClassificationResult(n - t, "thm-3.1-tree", fam)
    if statement_n_minus_2(g):
        return ClassificationResult(n - 2, "thm-n-2", fam)
    if statement_n_minus_3(g):
        return ClassificationResult(n - 3, "thm-n-3", fam)
    if statement_n_minus_4(g):
        return ClassificationResult(n - 4, "thm-n-4", fam)
    if not bridges(g):
        return ClassificationResult(2, "2ec", fam)
    if far_complement(g) and cut_edges_per_vertex(g) <= 2:
        return ClassificationResult(2, "thm-5.7", fam)
    return ClassificationResult(None, "none", fam)
