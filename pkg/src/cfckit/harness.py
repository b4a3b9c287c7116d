"""Exhaustive validation suites, Nordhaus-Gaddum records and report rendering."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Iterable

from .codec import to_graph6
from .constructions import (
    classify,
    color_path,
    color_spanning_tree,
    color_two_edge_connected,
    cut_edges_per_vertex,
    far_complement,
    is_star,
    statement_n_minus_2,
    statement_n_minus_3,
    statement_n_minus_4,
)
from .decomposition import block_matching, block_vertices, bridges, decompose
from .enumeration import CONNECTED_CAP, TREE_CAP, enumerate_graphs
from .families import family, path
from .figures import QUERIES, derive_figure_graphs, figure_keys
from .canon import canonical_code
from .graph import Graph, GraphError, complement, require_connected
from .solve import cfc_exact, component_values, exists_coloring, bounds, path_cfc
from .verify import verify

SCHEMA = "cfc-kit/1"


class SuiteError(GraphError):
    pass


@lru_cache(maxsize=None)
def cfc_value(g: Graph) -> int:
    return cfc_exact(g).value


# ---------------------------------------------------------------------------
# Nordhaus-Gaddum


@dataclass(frozen=True)
class NgRecord:
    g: Graph
    cfc_g: int
    cfc_comp: int
    sum: int
    product: int
    equality_tags: tuple[str, ...]
    characterization_match: bool


def _upper_extremal(g: Graph) -> bool:
    """A tree with max degree n-2, or P_5."""
    n = g.n
    if g.is_tree() and g.max_degree == n - 2:
        return True
    return n == 5 and g.is_path()


def ng_report(g: Graph) -> NgRecord:
    comp = complement(g)
    if not g.is_connected() or not comp.is_connected():
        raise GraphError("both the graph and its complement must be connected")
    n = g.n
    a, b = cfc_value(g), cfc_value(comp)
    s, p = a + b, a * b
    tags = []
    if s == n:
        tags.append("sum=n")
    if p == 2 * (n - 2):
        tags.append("product=2(n-2)")
    if s == 4:
        tags.append("sum=4")
    if p == 4:
        tags.append("product=4")
    extremal = _upper_extremal(g) or _upper_extremal(comp)
    match = (s == n) == extremal and (p == 2 * (n - 2)) == extremal
    return NgRecord(g, a, b, s, p, tuple(tags), match)


def _few_cut_edges_at_top(g: Graph) -> bool:
    """Every vertex of maximum degree meets at most two cut-edges."""
    br = bridges(g)
    top = g.max_degree
    return all(sum(1 for e in br if v in e) <= 2 for v in range(g.n) if g.degree(v) == top)


# ---------------------------------------------------------------------------
# suites

Outcome = tuple[str, bool, str, str]  # tag, ok, detail, graph6


@dataclass
class Violation:
    tag: str
    graph6: str
    detail: str


@dataclass
class Check:
    tag: str
    tested: int = 0
    violations: list[Violation] = field(default_factory=list)


@dataclass
class Report:
    suite: str
    population: str
    items: int
    checks: list[Check]
    elapsed: float

    @property
    def passed(self) -> bool:
        return all(not c.violations for c in self.checks)

    @property
    def violations(self) -> list[Violation]:
        return [v for c in self.checks for v in c.violations]


@dataclass(frozen=True)
class Suite:
    name: str
    tags: tuple[str, ...]
    default_order: int
    max_order: int
    population: Callable[[int], tuple[str, list[Any]]]
    evaluate: Callable[[Any], list[Outcome]]


def _connected(lo: int, hi: int) -> list[Graph]:
    return [g for n in range(lo, hi + 1) for g in enumerate_graphs("connected", n)]


def _trees(lo: int, hi: int) -> list[Graph]:
    return [g for n in range(lo, hi + 1) for g in enumerate_graphs("trees", n)]


def _out(tag: str, ok: bool, g: Graph, detail: str = "") -> Outcome:
    return (tag, bool(ok), detail, to_graph6(g))


# path formula ---------------------------------------------------------------

_RULER_MAX = 64


def _path_population(order: int):
    return f"paths with 1..{_RULER_MAX} edges; exact solve for orders 2..{order}", [
        (m, m + 1 <= order) for m in range(1, _RULER_MAX + 1)
    ]


def _path_evaluate(item) -> list[Outcome]:
    m, solve = item
    p = path(m + 1)
    col = color_path(m)
    out = [
        _out("ruler-verifies", verify(p, col).ok, p),
        _out("ruler-colour-count", col.k == path_cfc(m), p, f"k={col.k}"),
    ]
    if solve:
        v = cfc_value(p)
        out.append(_out("exact-value", v == path_cfc(m), p, f"cfc={v} formula={path_cfc(m)}"))
    return out


# tree threshold --------------------------------------------------------------


def _tree_population(order: int):
    return f"trees of order 6..{order}", _trees(6, order)


def _tree_evaluate(g: Graph) -> list[Outcome]:
    n, v, delta = g.n, cfc_value(g), g.max_degree
    out = []
    t = 1
    while n >= 2 * t + 2:
        out.append(_out("cfc=n-t iff max-degree=n-t", (v == n - t) == (delta == n - t), g, f"t={t} cfc={v} Δ={delta}"))
        t += 1
    return out


# cut-edge window and block bounds --------------------------------------------


def _bridge_population(order: int):
    return f"connected graphs with a cut-edge, n=2..{order}", [g for g in _connected(2, order) if bridges(g)]


def _bridge_evaluate(g: Graph) -> list[Outcome]:
    n, v = g.n, cfc_value(g)
    values = component_values(g)
    h = max(values)
    dec = decompose(g)
    out = [
        _out("window", h <= v <= h + 1, g, f"cfc={v} h={h}"),
        _out("block-count", v <= n - 2 * dec.r, g, f"cfc={v} r={dec.r}"),
    ]
    if dec.r == 1:
        size = len(block_vertices(dec.nontrivial_blocks[0]))
        out.append(_out("single-block", v <= n + 1 - size, g, f"cfc={v} |B|={size}"))
    if h >= 2 and values.count(h) == 1:
        out.append(_out("unique-max-component", v == h, g, f"cfc={v} h={h}"))
    return out


# global bounds ---------------------------------------------------------------


def _all_population(order: int):
    return f"connected graphs, n=2..{order}", _connected(2, order)


def _range_evaluate(g: Graph) -> list[Outcome]:
    n, v = g.n, cfc_value(g)
    return [
        _out("1<=cfc<=n-1", 1 <= v <= max(n - 1, 1), g, f"cfc={v}"),
        _out("cfc=1 iff complete", (v == 1) == g.is_complete(), g, f"cfc={v}"),
        _out("spanning-tree-colouring-verifies", verify(g, color_spanning_tree(g)).ok, g),
    ]


# characterisations -----------------------------------------------------------


def _char_evaluate(g: Graph) -> list[Outcome]:
    n, v = g.n, cfc_value(g)
    d = f"cfc={v}"
    out = [
        _out("cfc=1 iff complete", (v == 1) == g.is_complete(), g, d),
        _out("cfc=n-1 iff star", (v == n - 1) == is_star(g), g, d),
    ]
    if n >= 3:
        out.append(_out("cfc=n-2 iff listed", (v == n - 2) == statement_n_minus_2(g), g, d))
    if n >= 4:
        out.append(_out("cfc=n-3 iff listed", (v == n - 3) == statement_n_minus_3(g), g, d))
    if n >= 5:
        out.append(_out("cfc=n-4 iff listed", (v == n - 4) == statement_n_minus_4(g), g, d))
    return out


# two-edge-connected and block matching -----------------------------------------


def _matching_evaluate(g: Graph) -> list[Outcome]:
    out = []
    dec = decompose(g)
    chosen = block_matching(g)
    ends = [v for e in chosen for v in e]
    per_block = [sum(1 for e in b if e in chosen) for b in dec.nontrivial_blocks]
    ok = len(ends) == len(set(ends)) and all(c == 1 for c in per_block) and len(chosen) == dec.r
    out.append(_out("block-matching", ok, g, f"chosen={sorted(chosen)}"))
    if not bridges(g) and not g.is_complete() and g.n >= 3:
        col = color_two_edge_connected(g)
        out.append(_out("two-colour-construction", col.k == 2 and verify(g, col).ok, g, f"k={col.k}"))
        out.append(_out("no-one-colouring", exists_coloring(g, 1) is None, g))
    return out


# Nordhaus-Gaddum ---------------------------------------------------------------


def _ng_population(order: int):
    gs = [g for g in _connected(4, order) if complement(g).is_connected()]
    return f"connected graphs with connected complement, n=4..{order}", gs


def _ng_evaluate(g: Graph) -> list[Outcome]:
    rec = ng_report(g)
    n = g.n
    comp = complement(g)
    d = f"cfc={rec.cfc_g} complement={rec.cfc_comp}"
    out = [
        _out("4<=sum<=n", 4 <= rec.sum <= n, g, d),
        _out("4<=product<=2(n-2)", 4 <= rec.product <= 2 * (n - 2), g, d),
        _out("upper-equality iff extremal", rec.characterization_match, g, d),
    ]
    g_br, c_br = bool(bridges(g)), bool(bridges(comp))
    if not g_br and not c_br:
        out.append(_out("both-bridgeless sum=4", rec.sum == 4 and rec.product == 4, g, d))
    if g_br and c_br:
        out.append(_out("both-bridged one side has cfc 2", min(rec.cfc_g, rec.cfc_comp) == 2, g, d))
        few = _few_cut_edges_at_top(g) and _few_cut_edges_at_top(comp)
        out.append(_out("both-bridged sum=4 iff few cut-edges at max degree", (rec.sum == 4) == few, g, d))
    return out


def _far_population(order: int):
    gs = [g for g in _connected(2, order) if far_complement(g)]
    return f"non-complete connected graphs whose complement is connected with diameter >= 3, n<={order}", gs


def _far_evaluate(g: Graph) -> list[Outcome]:
    v, c = cfc_value(g), cut_edges_per_vertex(g)
    return [_out("cfc=2 iff at most two cut-edges per vertex", (v == 2) == (c <= 2), g, f"cfc={v} max-cut-edges={c}")]


# optimality ------------------------------------------------------------------


def _opt_evaluate(g: Graph) -> list[Outcome]:
    res = cfc_exact(g)
    v = res.value
    b = bounds(g)
    return [
        _out("certificate-checks", res.certificate.check(), g),
        _out("no-smaller-colouring", v == 1 or exists_coloring(g, v - 1) is None, g, f"cfc={v}"),
        _out("within-bounds", b.lower <= v <= b.upper, g, f"cfc={v} bounds=[{b.lower},{b.upper}]"),
    ]


# classifier ------------------------------------------------------------------


def _classify_population(order: int):
    gs = _connected(2, min(order, CONNECTED_CAP)) + _trees(CONNECTED_CAP + 1, order)
    return f"connected graphs n<={min(order, CONNECTED_CAP)} and trees n={CONNECTED_CAP + 1}..{order}", gs


def _classify_evaluate(g: Graph) -> list[Outcome]:
    r = classify(g)
    if r.predicted is None:
        return []
    v = cfc_value(g)
    return [_out("prediction-matches", r.predicted == v, g, f"{r.theorem} predicted={r.predicted} cfc={v}")]


_FAMILY_TAGS = ("star+e", "U") + tuple(f"U{i}" for i in range(1, 7)) + tuple(f"W{i}" for i in range(1, 9))


def _family_population(order: int):
    items = [family(tag, n) for n in range(7, order + 1) for tag in _FAMILY_TAGS]
    return f"named families, n=7..{order}", items


def _family_evaluate(g: Graph) -> list[Outcome]:
    res = cfc_exact(g)
    r = classify(g)
    return [
        _out("certificate-checks", res.certificate.check(), g),
        _out("prediction-matches", r.predicted == res.value, g, f"{r.theorem} predicted={r.predicted} cfc={res.value}"),
    ]


# figure sets -------------------------------------------------------------------


def _figure_population(order: int):
    names = [q.name for q in QUERIES.values() if q.order <= order]
    return f"figure sets up to order {order}", names


def _figure_evaluate(name: str) -> list[Outcome]:
    fs = derive_figure_graphs(name, strict=False)
    codes = ",".join(to_graph6(g) for g in fs.graphs)
    detail = f"{name}: expected {fs.expected}, derived {len(fs.graphs)} [{codes}]"
    label = to_graph6(fs.graphs[0]) if fs.graphs else ""
    derived = frozenset(canonical_code(g) for g in fs.graphs)
    out = [
        (f"cardinality {name}", fs.ok, detail, label),
        (f"frozen-data {name}", derived == figure_keys(name), detail, label),
    ]
    if name == "fig4-trees":
        out.append(("fig4-trees all cfc 4", all(v == 4 for v in fs.values), detail, label))
    return out


SUITES: dict[str, Suite] = {}


def _register(name, tags, default_order, max_order, population, evaluate):
    SUITES[name] = Suite(name, tuple(tags), default_order, max_order, population, evaluate)


_register(
    "path", ["ruler-verifies", "ruler-colour-count", "exact-value"], 11, 12, _path_population, _path_evaluate
)
_register("thm-3.1", ["cfc=n-t iff max-degree=n-t"], 9, TREE_CAP, _tree_population, _tree_evaluate)
_register(
    "lemma-2.6",
    ["window", "block-count", "single-block", "unique-max-component"],
    7,
    CONNECTED_CAP,
    _bridge_population,
    _bridge_evaluate,
)
_register(
    "prop-4.1",
    ["1<=cfc<=n-1", "cfc=1 iff complete", "spanning-tree-colouring-verifies"],
    6,
    CONNECTED_CAP,
    _all_population,
    _range_evaluate,
)
_register(
    "characterizations",
    ["cfc=1 iff complete", "cfc=n-1 iff star", "cfc=n-2 iff listed", "cfc=n-3 iff listed", "cfc=n-4 iff listed"],
    7,
    CONNECTED_CAP,
    _all_population,
    _char_evaluate,
)
_register(
    "cor-2.5",
    ["block-matching", "two-colour-construction", "no-one-colouring"],
    7,
    CONNECTED_CAP,
    _all_population,
    _matching_evaluate,
)
_register(
    "thm-5.1",
    [
        "4<=sum<=n",
        "4<=product<=2(n-2)",
        "upper-equality iff extremal",
        "both-bridgeless sum=4",
        "both-bridged one side has cfc 2",
        "both-bridged sum=4 iff few cut-edges at max degree",
    ],
    7,
    CONNECTED_CAP,
    _ng_population,
    _ng_evaluate,
)
_register(
    "thm-5.7",
    ["cfc=2 iff at most two cut-edges per vertex"],
    7,
    CONNECTED_CAP,
    _far_population,
    _far_evaluate,
)
_register(
    "optimality",
    ["certificate-checks", "no-smaller-colouring", "within-bounds"],
    6,
    CONNECTED_CAP,
    _all_population,
    _opt_evaluate,
)
_register("classify", ["prediction-matches"], 9, TREE_CAP, _classify_population, _classify_evaluate)
_register("families", ["certificate-checks", "prediction-matches"], 12, 14, _family_population, _family_evaluate)
_register(
    "figures",
    [f"{kind} {q}" for q in QUERIES for kind in ("cardinality", "frozen-data")] + ["fig4-trees all cfc 4"],
    9,
    TREE_CAP,
    _figure_population,
    _figure_evaluate,
)


def _evaluate(job: tuple[str, Any]) -> list[Outcome]:
    name, item = job
    return SUITES[name].evaluate(item)


def run_suite(name: str, order: int | None = None, jobs: int = 1) -> Report:
    """Apply a suite's checks to its whole population; output order never depends on ``jobs``."""
    if name not in SUITES:
        raise SuiteError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    suite = SUITES[name]
    order = suite.default_order if order is None else order
    if order > suite.max_order:
        raise SuiteError(f"suite {name} supports order <= {suite.max_order}, got {order}")
    start = time.perf_counter()
    description, items = suite.population(order)
    jobs_list = [(name, item) for item in items]
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_evaluate, jobs_list, chunksize=max(1, len(items) // (4 * jobs))))
    else:
        results = [_evaluate(job) for job in jobs_list]
    checks = {tag: Check(tag) for tag in suite.tags}
    for outcomes in results:
        for tag, ok, detail, g6 in outcomes:
            check = checks[tag]
            check.tested += 1
            if not ok:
                check.violations.append(Violation(tag, g6, detail))
    elapsed = time.perf_counter() - start
    return Report(name, description, len(items), list(checks.values()), elapsed)


# ---------------------------------------------------------------------------
# rendering


def structured(records: Iterable[dict]) -> str:
    """Header line plus one JSON object per line, keys in insertion order."""
    lines = [SCHEMA] + [json.dumps(r, ensure_ascii=False, separators=(",", ":")) for r in records]
    return "\n".join(lines) + "\n"


def report_records(report: Report) -> list[dict]:
    recs: list[dict] = [
        {"record": "suite", "suite": report.suite, "population": report.population, "items": report.items}
    ]
    for c in report.checks:
        recs.append({"record": "check", "tag": c.tag, "tested": c.tested, "violations": len(c.violations)})
        for v in c.violations:
            recs.append({"record": "violation", "tag": v.tag, "graph6": v.graph6, "detail": v.detail})
    recs.append({"record": "result", "passed": report.passed})
    return recs


def report_text(report: Report) -> str:
    lines = [f"suite {report.suite}: {report.population} ({report.items} items, {report.elapsed:.1f}s)"]
    for c in report.checks:
        mark = "ok  " if not c.violations else "FAIL"
        lines.append(f"  {mark} {c.tag}: {c.tested} tested, {len(c.violations)} violations")
        for v in c.violations[:20]:
            lines.append(f"       {v.graph6}  {v.detail}")
        if len(c.violations) > 20:
            lines.append(f"       ... {len(c.violations) - 20} more")
    lines.append("PASS" if report.passed else "FAIL")
    return "\n".join(lines) + "\n"


def certificate_records(g: Graph, result) -> list[dict]:
    """Records for a solve or verify outcome (a certificate or a failed pair)."""
    cert = result.certificate if hasattr(result, "certificate") else result
    col = cert.coloring
    recs: list[dict] = [{"record": "graph", "n": g.n, "m": g.m, "graph6": to_graph6(g)}]
    if hasattr(result, "value"):
        recs.append(
            {
                "record": "solution",
                "value": result.value,
                "method": result.method,
                "evidence": result.optimality_evidence,
            }
        )
    recs.append({"record": "coloring", "k": col.k, "edges": [[u, v, c] for (u, v), c in zip(g.edges, col.colors)]})
    if cert.ok:
        for (a, b), (p, c) in sorted(cert.witnesses.items()):
            recs.append({"record": "witness", "pair": [a, b], "path": list(p), "color": c})
    else:
        recs.append({"record": "failed-pair", "pair": list(cert.pair)})
    recs.append({"record": "result", "valid": cert.ok})
    return recs
