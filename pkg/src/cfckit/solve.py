"""Exact conflict-free connection numbers.

The decision procedure :func:`exists_coloring` is a backtracking search
over edges with smallest-new-colour symmetry breaking.  Every simple path
of every vertex pair is precomputed as a tuple of edge positions and
checked exactly once, at the position where its last edge is coloured;
a pair whose paths are all coloured without a conflict-free one kills the
branch.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from functools import lru_cache

from .decomposition import block_vertices, bridges, cut_edge_forest, decompose
from .graph import Edge, Graph, GraphError, diameter, require_connected
from .verify import CfcCertificate, EdgeColoring, ResourceExceeded, verify

DEFAULT_NODE_BUDGET = 10**8


def default_budget() -> int:
    """Search-node budget; the ``CFC_BUDGET`` environment variable overrides it."""
    raw = os.environ.get("CFC_BUDGET")
    return int(raw) if raw else DEFAULT_NODE_BUDGET


def path_cfc(m: int) -> int:
    """ceil(log2(m + 1)) for a path with ``m`` edges."""
    if m < 1:
        raise GraphError("a path needs at least one edge")
    return m.bit_length()


def ceil_log2(x: int) -> int:
    return 0 if x <= 1 else (x - 1).bit_length()


# ---------------------------------------------------------------------------
# decision search


def _search_order(g: Graph) -> list[Edge]:
    """Bridges first (component by component, BFS over shared endpoints), then block edges."""
    br = bridges(g)
    order: list[Edge] = []
    placed: set[Edge] = set()

    def grow(pool: list[Edge]) -> None:
        pool = [e for e in pool if e not in placed]
        while pool:
            touched = set(pool[0])
            placed.add(pool[0])
            order.append(pool[0])
            pool = pool[1:]
            while True:
                nxt = [e for e in pool if e[0] in touched or e[1] in touched]
                if not nxt:
                    break
                e = nxt[0]
                pool.remove(e)
                placed.add(e)
                order.append(e)
                touched.update(e)

    grow(sorted(br))
    if len(order) < g.m:
        dec = decompose(g)
        for block in dec.nontrivial_blocks:
            grow(list(block))
    return order


def _simple_paths(g: Graph, u: int, v: int, pos: dict[Edge, int]) -> list[tuple[int, ...]]:
    adj = [sorted(a) for a in g.adjacency]
    out: list[tuple[int, ...]] = []
    on = [False] * g.n
    on[u] = True
    trail: list[int] = []

    def dfs(x: int) -> None:
        for y in adj[x]:
            if on[y]:
                continue
            trail.append(pos[(x, y) if x < y else (y, x)])
            if y == v:
                out.append(tuple(trail))
            else:
                on[y] = True
                dfs(y)
                on[y] = False
            trail.pop()

    dfs(u)
    return out


class _Search:
    def __init__(self, g: Graph, budget: int):
        self.g = g
        self.budget = budget
        self.order = _search_order(g)
        pos = {e: i for i, e in enumerate(self.order)}
        m = g.m
        self.completing: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(m)]
        self.due: list[list[int]] = [[] for _ in range(m)]
        pid = 0
        for a in range(g.n):
            for b in range(a + 1, g.n):
                paths = _simple_paths(g, a, b, pos)
                last = 0
                for p in paths:
                    top = max(p)
                    self.completing[top].append((pid, p))
                    last = max(last, top)
                self.due[last].append(pid)
                pid += 1
        self.npairs = pid
        br = bridges(g)
        # bridges sharing a vertex always lie together on the unique path between
        # their far endpoints, so they need distinct colours
        self.clash: list[list[int]] = [[] for _ in range(m)]
        for i, e in enumerate(self.order):
            if e not in br:
                continue
            for j in range(i):
                f = self.order[j]
                if f in br and (e[0] in f or e[1] in f):
                    self.clash[i].append(j)
        self.nodes = 0

    def run(self, k: int) -> list[int] | None:
        m = self.g.m
        col = [0] * m
        sat = [False] * self.npairs
        completing, due, clash = self.completing, self.due, self.clash

        def cf(p: tuple[int, ...]) -> bool:
            once = 0
            many = 0
            for q in p:
                bit = 1 << col[q]
                many |= once & bit
                once |= bit
            return bool(once & ~many)

        def place(i: int, used: int) -> bool:
            if i == m:
                return True
            banned = {col[j] for j in clash[i]}
            for c in range(1, min(k, used + 1) + 1):
                if c in banned:
                    continue
                self.nodes += 1
                if self.nodes > self.budget:
                    raise ResourceExceeded(f"search exceeded {self.budget} nodes")
                col[i] = c
                newly = []
                for pid, p in completing[i]:
                    if not sat[pid] and cf(p):
                        sat[pid] = True
                        newly.append(pid)
                if all(sat[pid] for pid in due[i]) and place(i + 1, max(used, c)):
                    return True
                for pid in newly:
                    sat[pid] = False
            col[i] = 0
            return False

        if m == 0:
            return [] if self.npairs == 0 else None
        return list(col) if place(0, 0) else None


def exists_coloring(g: Graph, k: int, budget: int | None = None) -> EdgeColoring | None:
    """A conflict-free connection coloring with at most ``k`` colours, or ``None``."""
    require_connected(g)
    if k < 1:
        return None if g.m else EdgeColoring(g, ())
    search = _Search(g, default_budget() if budget is None else budget)
    found = search.run(k)
    if found is None:
        return None
    mapping = {e: c for e, c in zip(search.order, found)}
    return EdgeColoring.from_mapping(g, mapping)


# ---------------------------------------------------------------------------
# bounds


@dataclass(frozen=True)
class Bounds:
    lower: int
    upper: int
    lower_reasons: tuple[tuple[int, str], ...]
    upper_reasons: tuple[tuple[int, str], ...]
    # (Δ-2)·log2(n)/(log2(Δ)-1) for trees with Δ >= 3; reported, never used to prune
    tree_estimate: float | None = None


def max_pendant_multiplicity(g: Graph) -> int:
    deg = g.degrees
    best = 0
    for v in range(g.n):
        leaves = sum(1 for w in g.adjacency[v] if deg[w] == 1)
        best = max(best, leaves)
    return best


def h_value(g: Graph, budget: int | None = None) -> int:
    """max cfc over the components of C(G); 1 when G has no bridge."""
    require_connected(g)
    forest = cut_edge_forest(g)
    if forest.s == 0:
        return 1
    return max(_tree_value(t, budget) for t in forest.components)


def component_values(g: Graph, budget: int | None = None) -> list[int]:
    return [_tree_value(t, budget) for t in cut_edge_forest(g).components]


def _tree_value(t: Graph, budget: int | None = None) -> int:
    from .canon import canonical_graph

    return cfc_tree_exact(canonical_graph(t), budget).value


def bounds(g: Graph, budget: int | None = None) -> Bounds:
    require_connected(g)
    n = g.n
    lower: list[tuple[int, str]] = [(1, "trivial")]
    upper: list[tuple[int, str]] = [(max(n - 1, 1), "spanning-tree")]
    estimate = None
    complete = g.is_complete()
    if complete:
        upper.append((1, "complete"))
    else:
        lower.append((2, "noncomplete"))
    br = bridges(g)
    lower.append((max_pendant_multiplicity(g), "pendant-edges"))
    if g.is_tree():
        delta = g.max_degree
        diam = int(diameter(g))
        lower.append((delta, "max-degree"))
        lower.append((ceil_log2(diam), "log-diameter"))
        if delta <= 2:
            upper.append((path_cfc(g.m), "path-formula"))
        else:
            estimate = (delta - 2) * math.log2(n) / (math.log2(delta) - 1)
    elif br:
        h = h_value(g, budget)
        lower.append((h, "cut-edge-forest"))
        upper.append((h + 1, "cut-edge-forest"))
    elif not complete:
        upper.append((2, "two-edge-connected"))
    if br:
        r = decompose(g).r
        upper.append((n - 2 * r, "block-count"))
        if r == 1:
            (block,) = decompose(g).nontrivial_blocks
            upper.append((n + 1 - len(block_vertices(block)), "single-block"))
    lo = max(v for v, _ in lower)
    hi = min(v for v, _ in upper)
    return Bounds(lo, hi, tuple(lower), tuple(upper), estimate)


# ---------------------------------------------------------------------------
# exact values


@dataclass(frozen=True)
class SolveResult:
    value: int
    certificate: CfcCertificate
    optimality_evidence: str
    method: str
    lower: int = 0
    notes: tuple[str, ...] = field(default=())

    @property
    def coloring(self) -> EdgeColoring:
        return self.certificate.coloring


def _certify(g: Graph, coloring: EdgeColoring) -> CfcCertificate | None:
    result = verify(g, coloring)
    return result if result.ok else None


def _minimal_from(g: Graph, start: int, budget: int | None) -> tuple[int, EdgeColoring]:
    k = max(start, 1)
    while True:
        found = exists_coloring(g, k, budget)
        if found is not None:
            return k, found
        k += 1
        if k > max(g.n - 1, 1):
            raise AssertionError("no coloring within n-1 colours; spanning-tree bound violated")


@lru_cache(maxsize=4096)
def cfc_tree_exact(t: Graph, budget: int | None = None) -> SolveResult:
    if not t.is_tree() or t.n < 2:
        raise GraphError("cfc_tree_exact needs a tree on at least two vertices")
    from .constructions import color_path

    b = bounds(t, budget)
    if t.max_degree <= 2:
        k = path_cfc(t.m)
        coloring = _path_coloring_on(t, color_path(t.m))
        cert = _certify(t, coloring)
        if cert is not None and (k == 1 or exists_coloring(t, k - 1, budget) is None):
            evidence = "trivial" if k == 1 else f"exhaustive search found no {k - 1}-coloring"
            return SolveResult(k, cert, evidence, "path-ruler", b.lower)
    n, delta = t.n, t.max_degree
    spare = n - delta
    method = "tree-threshold" if spare >= 1 and n >= 2 * spare + 2 else "tree-search"
    k, coloring = _minimal_from(t, b.lower, budget)
    cert = _certify(t, coloring)
    assert cert is not None, "search returned an invalid coloring"
    if k == b.lower:
        tag = next(tag for v, tag in b.lower_reasons if v == k)
        evidence = f"lower bound {tag}"
    else:
        evidence = f"exhaustive search found no {k - 1}-coloring"
    return SolveResult(k, cert, evidence, method, b.lower)


def _path_coloring_on(t: Graph, ruler: EdgeColoring) -> EdgeColoring:
    """Transfer a ruler coloring of 0-1-...-m onto the path ``t``."""
    start = next(v for v in range(t.n) if t.degree(v) <= 1)
    walk = [start]
    while len(walk) < t.n:
        walk.append(next(w for w in t.adjacency[walk[-1]] if w not in walk[-2:]))
    mapping = {}
    for i, (a, b) in enumerate(zip(walk, walk[1:])):
        mapping[(min(a, b), max(a, b))] = ruler.colors[i]
    return EdgeColoring.from_mapping(t, mapping)


def cfc_exact(g: Graph, budget: int | None = None) -> SolveResult:
    """cfc(G) with a verified certificate and a reason it cannot be smaller."""
    require_connected(g)
    if g.n < 2:
        raise GraphError("cfc is defined for graphs with at least two vertices")
    from .constructions import color_general, color_two_edge_connected

    if g.is_complete():
        cert = _certify(g, EdgeColoring(g, (1,) * g.m))
        return SolveResult(1, cert, "trivial", "complete", 1)
    if not bridges(g):
        cert = _certify(g, color_two_edge_connected(g))
        if cert is not None:
            return SolveResult(2, cert, "lower bound noncomplete", "two-edge-connected", 2)
        k, coloring = _minimal_from(g, 2, budget)
        return SolveResult(k, _certify(g, coloring), "search", "search", 2, ("two-edge-connected construction failed",))
    if g.is_tree():
        return cfc_tree_exact(g, budget)

    values = component_values(g, budget)
    h = max(values)
    notes: list[str] = []
    if h == 1:
        cert = _certify(g, color_general(g, budget=budget))
        if cert is not None:
            return SolveResult(2, cert, "lower bound noncomplete", "single-edge-forest", 2)
        notes.append("single-edge-forest construction failed")
    elif values.count(h) == 1:
        cert = _certify(g, color_general(g, budget=budget))
        if cert is not None:
            return SolveResult(h, cert, "lower bound cut-edge-forest", "unique-max-component", h)
        notes.append("unique-max-component construction failed")
    low = max(h, 2)
    found = exists_coloring(g, low, budget)
    if found is not None:
        return SolveResult(low, _certify(g, found), "lower bound cut-edge-forest", "search", low, tuple(notes))
    cert = _certify(g, color_general(g, fresh=True, budget=budget))
    if cert is not None and cert.coloring.k == low + 1:
        return SolveResult(low + 1, cert, f"exhaustive search found no {low}-coloring", "window-upper", low, tuple(notes))
    notes.append("fresh-colour construction failed")
    k, coloring = _minimal_from(g, low + 1, budget)
    return SolveResult(k, _certify(g, coloring), f"exhaustive search found no {k - 1}-coloring", "search", low, tuple(notes))
