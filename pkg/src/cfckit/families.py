"""Named graph families, deterministically labelled (hubs first, then leaves)."""

from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_code
from .graph import Edge, Graph, GraphError, graph_from_edge_list


@dataclass(frozen=True)
class FamilySpec:
    """A family tag plus its integer parameters.

    Tags: ``K`` (n), ``Kbip`` (s, t), ``P`` (n), ``C`` (n), ``star`` (n),
    ``star+e`` (n), ``S`` (a, n) for the double star S_{a,n-a}, ``U`` (n),
    ``U1``..``U6`` (n) and ``W1``..``W8`` (n).
    """

    tag: str
    params: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.tag}{self.params}"


def complete(n: int) -> Graph:
    return graph_from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(s: int, t: int) -> Graph:
    return graph_from_edge_list(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def path(n: int) -> Graph:
    return graph_from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return graph_from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n-1} with hub 0."""
    return graph_from_edge_list(n, [(0, i) for i in range(1, n)])


def double_star(a: int, n: int) -> Graph:
    """S_{a,n-a}: hub 0 of degree a, hub 1 of degree n-a."""
    pairs = [(0, 1)] + [(0, i) for i in range(2, a + 1)] + [(1, i) for i in range(a + 1, n)]
    return graph_from_edge_list(n, pairs)


def plus_edge(g: Graph) -> Graph:
    """G+e: add an edge between non-adjacent vertices.

    Only defined when every choice of non-adjacent pair gives the same
    graph up to isomorphism; raises otherwise.
    """
    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    if not missing:
        raise GraphError("graph is complete; no edge to add")
    keys = {canonical_code(g.add_edges([e])) for e in missing}
    if len(keys) != 1:
        raise GraphError("G+e is not well defined for this graph")
    return g.add_edges([missing[0]])


def _attach_pendant(g: Graph, at: int) -> Graph:
    return Graph(g.n + 1, g.edges).add_edges([(at, g.n)])


def _unicyclic(n: int) -> Graph:
    # S_{3,n-3} plus the edge between the two leaves of the degree-3 hub (vertices 2, 3)
    return double_star(3, n).add_edges([(2, 3)])


def _star_plus_edge(n: int) -> Graph:
    return star(n).add_edges([(1, 2)])


def _hang_block(n: int, block: list[Edge], block_size: int, at_centre: bool) -> Graph:
    """K_{1,k} glued to a block on ``block_size`` vertices.

    The star has hub 0 and leaves 1..k.  The block's vertex 0 is identified
    with the hub (``at_centre``) or with leaf 1; its other vertices follow.
    """
    k = n - block_size
    glue = 0 if at_centre else 1
    rest = list(range(k + 1, n))
    names = [glue] + rest
    pairs = [(0, i) for i in range(1, k + 1)]
    pairs += [(names[a], names[b]) for a, b in block]
    return graph_from_edge_list(n, pairs)


_C4 = [(0, 1), (1, 2), (2, 3), (0, 3)]
_K4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
# K4 minus an edge at the glued vertex 0, and minus the opposite edge
_K4_LESS_GLUED = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
_K4_LESS_FAR = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]

_MIN_ORDER = {
    "K": 1, "P": 1, "C": 3, "star": 2, "star+e": 4, "U": 5,
    **{f"U{i}": 7 for i in range(1, 7)},
    **{f"W{i}": 7 for i in range(1, 9)},
}


def make_family(spec: FamilySpec) -> Graph:
    tag, params = spec.tag, spec.params
    if tag == "Kbip":
        s, t = params
        if s < 1 or t < 1:
            raise GraphError("K_{s,t} needs s, t >= 1")
        return complete_bipartite(s, t)
    if tag == "S":
        a, n = params
        if a < 2 or n - a < 2:
            raise GraphError("S_{a,n-a} needs a >= 2 and n - a >= 2")
        return double_star(a, n)
    (n,) = params
    if tag not in _MIN_ORDER:
        raise GraphError(f"unknown family tag {tag!r}")
    if n < _MIN_ORDER[tag]:
        raise GraphError(f"{tag} needs order >= {_MIN_ORDER[tag]}, got {n}")
    if tag == "K":
        return complete(n)
    if tag == "P":
        return path(n)
    if tag == "C":
        return cycle(n)
    if tag == "star":
        return star(n)
    if tag == "star+e":
        return _star_plus_edge(n)
    if tag == "U":
        return _unicyclic(n)
    if tag == "U1":
        return _attach_pendant(_unicyclic(n - 1), 2)
    if tag == "U2":
        return _attach_pendant(_unicyclic(n - 1), n - 2)
    if tag == "U3":
        # star hub 0, leaves 1..n-4; leaf 1 joined to triangle n-3, n-2, n-1
        pairs = [(0, i) for i in range(1, n - 3)] + [(1, n - 3), (n - 3, n - 2), (n - 3, n - 1), (n - 2, n - 1)]
        return graph_from_edge_list(n, pairs)
    if tag == "U4":
        return _attach_pendant(_star_plus_edge(n - 1), 1)
    if tag == "U5":
        return _attach_pendant(_star_plus_edge(n - 1), n - 2)
    if tag == "U6":
        return double_star(4, n).add_edges([(2, 3)])
    if tag == "W1":
        return _hang_block(n, _C4, 4, at_centre=False)
    if tag == "W2":
        return _hang_block(n, _K4, 4, at_centre=False)
    if tag == "W3":
        return _hang_block(n, _K4_LESS_GLUED, 4, at_centre=False)
    if tag == "W4":
        return _hang_block(n, _K4_LESS_FAR, 4, at_centre=False)
    if tag == "W5":
        return _hang_block(n, _C4, 4, at_centre=True)
    if tag == "W6":
        return _hang_block(n, _K4, 4, at_centre=True)
    if tag == "W7":
        return _hang_block(n, _K4_LESS_GLUED, 4, at_centre=True)
    if tag == "W8":
        return _hang_block(n, _K4_LESS_FAR, 4, at_centre=True)
    raise GraphError(f"unknown family tag {tag!r}")


def family(tag: str, *params: int) -> Graph:
    return make_family(FamilySpec(tag, tuple(params)))


# Fixed precedence for membership reports; earlier tags win on coincidences
# such as P_4 = S_{2,2} or C_4 = K_{2,2}.
_MEMBERSHIP_ORDER = (
    ["K", "star", "P", "C", "Kbip", "star+e", "S", "U"]
    + [f"U{i}" for i in range(1, 7)]
    + [f"W{i}" for i in range(1, 9)]
)

_DISPLAY = {
    "K": "K_n", "star": "K_{1,n-1}", "P": "P_n", "C": "C_n", "star+e": "K_{1,n-1}+e",
    "U": "U_n", **{f"U{i}": f"U_n^{i}" for i in range(1, 7)}, **{f"W{i}": f"W_n^{i}" for i in range(1, 9)},
}


def family_specs_of_order(n: int) -> list[FamilySpec]:
    specs = []
    for tag in _MEMBERSHIP_ORDER:
        if tag == "Kbip":
            specs += [FamilySpec("Kbip", (s, n - s)) for s in range(1, n // 2 + 1)]
        elif tag == "S":
            specs += [FamilySpec("S", (a, n)) for a in range(2, n // 2 + 1)]
        elif n >= _MIN_ORDER[tag]:
            specs.append(FamilySpec(tag, (n,)))
    return specs


def display_tag(spec: FamilySpec) -> str:
    if spec.tag == "Kbip":
        return "K_{%d,%d}" % spec.params
    if spec.tag == "S":
        a, n = spec.params
        return f"S_{{{a},{n - a}}}"
    return _DISPLAY[spec.tag]


def family_membership(g: Graph) -> str | None:
    """Tag of the first named family at order n(g) isomorphic to ``g``."""
    key = canonical_code(g)
    for spec in family_specs_of_order(g.n):
        h = make_family(spec)
        if h.m == g.m and canonical_code(h) == key:
            return display_tag(spec)
    return None
