"""Small named graph sets pinned down by order, degree and cfc filters.

Each :class:`FigureQuery` describes a population (trees or connected graphs
of one order), a structural filter and a cfc filter, plus the number of
graphs the set is expected to contain.  :func:`derive_figure_graphs` runs
the query; the results are frozen in ``data/figure_graphs.txt`` so that the
classifier does not have to re-derive them on import.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Callable

from .canon import canonical_code, canonical_graph
from .codec import from_graph6, to_graph6
from .decomposition import block_vertices, cut_edge_forest, decompose
from .enumeration import enumerate_graphs
from .families import family_membership
from .graph import Graph, GraphError


class FigureCardinalityError(AssertionError):
    """A derived set does not have the expected number of members."""

    def __init__(self, name: str, expected: int, found: int):
        super().__init__(f"{name}: expected {expected} graphs, derived {found}")
        self.name = name
        self.expected = expected
        self.found = found


@dataclass(frozen=True)
class FigureQuery:
    name: str
    kind: str
    order: int
    description: str
    shape: Callable[[Graph], bool]
    cfc: int | None
    expected: int


@dataclass(frozen=True)
class FigureSet:
    name: str
    expected: int
    graphs: tuple[Graph, ...]
    values: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return len(self.graphs) == self.expected


def _max_degree(d: int) -> Callable[[Graph], bool]:
    return lambda g: g.max_degree == d


def _small_with_bridge(g: Graph) -> bool:
    # order-5 graphs with a cut-edge, other than the two named unicyclic families
    return bool(cut_edge_forest(g).s) and family_membership(g) not in ("K_{1,n-1}+e", "U_n")


def _triangle_block(g: Graph) -> bool:
    blocks = decompose(g).nontrivial_blocks
    return len(blocks) == 1 and len(block_vertices(blocks[0])) == 3


def _two_components_of_cfc_two(g: Graph) -> bool:
    from .solve import component_values

    return _triangle_block(g) and component_values(g) == [2, 2]


def _path_forest(g: Graph) -> bool:
    if not _triangle_block(g):
        return False
    comps = cut_edge_forest(g).components
    return len(comps) == 1 and comps[0].n == 5 and comps[0].is_path()


QUERIES: dict[str, FigureQuery] = {
    q.name: q
    for q in [
        FigureQuery("G1-G5", "connected", 5, "order 5, has a cut-edge, not K_{1,4}+e or U_5", _small_with_bridge, 2, 5),
        FigureQuery("fig2-trees", "trees", 7, "trees of order 7 with max degree 3", _max_degree(3), None, 5),
        FigureQuery("G6", "trees", 7, "trees of order 7 with max degree 3", _max_degree(3), 4, 1),
        FigureQuery("H1-H5", "trees", 8, "trees of order 8 with max degree 3", _max_degree(3), 4, 5),
        FigureQuery("H6-H10", "trees", 8, "trees of order 8 with max degree 3", _max_degree(3), 3, 5),
        FigureQuery("fig4-trees", "trees", 8, "trees of order 8 with max degree 4", _max_degree(4), None, 7),
        FigureQuery("H11", "trees", 9, "trees of order 9 with max degree 4", _max_degree(4), 5, 1),
        FigureQuery(
            "H12",
            "connected",
            7,
            "order 7, one triangle block, C(G) has two components of cfc 2",
            _two_components_of_cfc_two,
            3,
            1,
        ),
        FigureQuery("H13", "connected", 7, "order 7, one triangle block, C(G) = P_5", _path_forest, 3, 1),
    ]
}


def derive_figure_graphs(which: str, strict: bool = True) -> FigureSet:
    """Run the named query; with ``strict`` a cardinality mismatch raises."""
    from .solve import cfc_exact

    if which not in QUERIES:
        raise GraphError(f"unknown figure set {which!r}; known: {', '.join(QUERIES)}")
    q = QUERIES[which]
    graphs, values = [], []
    for g in enumerate_graphs(q.kind, q.order):
        if not q.shape(g):
            continue
        value = cfc_exact(g).value
        if q.cfc is None or value == q.cfc:
            graphs.append(g)
            values.append(value)
    found = FigureSet(q.name, q.expected, tuple(graphs), tuple(values))
    if strict and not found.ok:
        raise FigureCardinalityError(q.name, q.expected, len(graphs))
    return found


def render_figure_data(sets: list[FigureSet]) -> str:
    lines = [
        "# Canonical graph6 strings of the derived figure sets.",
        "# Regenerate with: python -m cfckit figures --write",
        "# Columns: set name, graph6, cfc.",
    ]
    for fs in sets:
        q = QUERIES[fs.name]
        lines.append("")
        lines.append(f"# {fs.name}: {q.description}; cfc filter {q.cfc if q.cfc is not None else 'none'}")
        lines.append(f"# expected {fs.expected}, derived {len(fs.graphs)}")
        for g, v in zip(fs.graphs, fs.values):
            lines.append(f"{fs.name} {to_graph6(canonical_graph(g))} {v}")
    return "\n".join(lines) + "\n"


def derive_all(strict: bool = False) -> list[FigureSet]:
    return [derive_figure_graphs(name, strict=strict) for name in QUERIES]


@lru_cache(maxsize=1)
def load_figure_data() -> dict[str, tuple[Graph, ...]]:
    """The frozen sets from ``data/figure_graphs.txt``, keyed by set name."""
    text = resources.files("cfckit").joinpath("data/figure_graphs.txt").read_text()
    out: dict[str, list[Graph]] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, code, _value = line.split()
        out.setdefault(name, []).append(from_graph6(code))
    return {k: tuple(v) for k, v in out.items()}


def figure_keys(*names: str) -> frozenset[tuple[int, int]]:
    data = load_figure_data()
    return frozenset(canonical_code(g) for name in names for g in data.get(name, ()))
