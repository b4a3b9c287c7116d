"""Command-line interface: ``python -m cfckit <command>`` or ``cfckit <command>``.

Structured output (``--output structured``) starts with the header line
``cfc-kit/1`` and continues with one JSON object per line.  Every object has
a ``record`` key first; the remaining keys appear in a fixed order:

    graph        n, m, graph6
    solution     value, method, evidence
    coloring     k, edges (list of [u, v, c])
    witness      pair [a, b], path (vertex list), color
    failed-pair  pair
    result       valid | passed
    suite        suite, population, items
    check        tag, tested, violations (count)
    violation    tag, graph6, detail

Exit status: 0 on success, 1 when a verification, suite or figure check
fails, 2 on usage errors, malformed input or an exhausted search budget.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .codec import CodecError, format_graph, from_coloring_text, parse_graph, to_coloring_text, to_graph6
from .constructions import classify, color_general, color_spanning_tree, color_two_edge_connected
from .decomposition import block_matching, bridges, cut_edge_forest, decompose
from .enumeration import enumerate_graphs
from .figures import QUERIES, derive_figure_graphs, render_figure_data
from .graph import GraphError
from .harness import (
    SUITES,
    SuiteError,
    certificate_records,
    ng_report,
    report_records,
    report_text,
    run_suite,
    structured,
)
from .solve import cfc_exact, h_value
from .verify import DEFAULT_PATH_BUDGET, EdgeColoring, ResourceExceeded, verify

FIGURE_DATA = Path(__file__).parent / "data" / "figure_graphs.txt"


def _read_graph(args):
    src = args.graph
    if src is None or src == "-":
        text = sys.stdin.read()
    elif os.path.isfile(src):
        text = Path(src).read_text()
    else:
        text = src
    return parse_graph(text, args.format)


def _edge_text(edges) -> str:
    return " ".join(f"{u}-{v}" for u, v in edges) or "(none)"


def _emit(args, records: list[dict], text: str) -> None:
    sys.stdout.write(structured(records) if args.output == "structured" else text)


def _certificate_text(g, result) -> str:
    cert = result.certificate if hasattr(result, "certificate") else result
    col = cert.coloring
    lines = [f"graph {to_graph6(g)}  n={g.n} m={g.m}"]
    if hasattr(result, "value"):
        lines.append(f"cfc = {result.value}  ({result.method}; {result.optimality_evidence})")
    lines.append("coloring: " + " ".join(f"{u}-{v}:{c}" for (u, v), c in zip(g.edges, col.colors)))
    if cert.ok:
        lines.append("witnesses:")
        for (a, b), (p, c) in sorted(cert.witnesses.items()):
            lines.append(f"  {a}-{b}: {' '.join(map(str, p))}  (colour {c} once)")
        lines.append("valid")
    else:
        a, b = cert.pair
        lines.append(f"no conflict-free path between {a} and {b}")
        lines.append("invalid")
    return "\n".join(lines) + "\n"


def cmd_solve(args) -> int:
    g = _read_graph(args)
    result = cfc_exact(g, args.budget)
    _emit(args, certificate_records(g, result), _certificate_text(g, result))
    return 0


def _coloring_from_args(args, g) -> EdgeColoring:
    if args.coloring:
        cg, mapping = from_coloring_text(Path(args.coloring).read_text())
        if cg != g:
            raise GraphError("coloring file describes a different graph")
        return EdgeColoring.from_mapping(g, mapping)
    if args.colors:
        raw = [int(tok) for tok in args.colors.replace(",", " ").split()]
        return EdgeColoring.from_sequence(g, raw)
    raise GraphError("verify needs --coloring FILE or --colors LIST")


def cmd_verify(args) -> int:
    g = _read_graph(args)
    col = _coloring_from_args(args, g)
    result = verify(g, col, cap=args.path_cap, budget=DEFAULT_PATH_BUDGET)
    _emit(args, certificate_records(g, result), _certificate_text(g, result))
    return 0 if result.ok else 1


_STRATEGIES = {
    "optimal": lambda g, budget: cfc_exact(g, budget).coloring,
    "spanning-tree": lambda g, budget: color_spanning_tree(g),
    "two-edge-connected": lambda g, budget: color_two_edge_connected(g),
    "general": lambda g, budget: color_general(g, budget=budget),
    "fresh": lambda g, budget: color_general(g, fresh=True, budget=budget),
}


def cmd_color(args) -> int:
    g = _read_graph(args)
    col = _STRATEGIES[args.strategy](g, args.budget)
    ok = verify(g, col, cap=args.path_cap).ok
    records = [
        {"record": "graph", "n": g.n, "m": g.m, "graph6": to_graph6(g)},
        {"record": "coloring", "k": col.k, "edges": [[u, v, c] for (u, v), c in zip(g.edges, col.colors)]},
        {"record": "result", "valid": ok},
    ]
    _emit(args, records, to_coloring_text(g, col.as_mapping()))
    return 0 if ok else 1


def cmd_classify(args) -> int:
    g = _read_graph(args)
    r = classify(g)
    records = [
        {"record": "graph", "n": g.n, "m": g.m, "graph6": to_graph6(g)},
        {"record": "classification", "predicted": r.predicted, "theorem": r.theorem, "family": r.family},
    ]
    pred = "none" if r.predicted is None else str(r.predicted)
    text = f"predicted {pred}  theorem {r.theorem}  family {r.family or '-'}\n"
    _emit(args, records, text)
    return 0


def cmd_decompose(args) -> int:
    g = _read_graph(args)
    dec = decompose(g)
    forest = cut_edge_forest(g)
    h = h_value(g, args.budget)
    match = sorted(block_matching(g))
    comps = [forest.parent_edges(i) for i in range(forest.s)]
    records = [
        {"record": "graph", "n": g.n, "m": g.m, "graph6": to_graph6(g)},
        {
            "record": "decomposition",
            "bridges": [list(e) for e in sorted(bridges(g))],
            "blocks": [[list(e) for e in b] for b in dec.blocks],
            "cut_vertices": sorted(dec.cut_vertices),
            "r": dec.r,
            "components": [[list(e) for e in c] for c in comps],
            "h": h,
            "matching": [list(e) for e in match],
        },
    ]
    lines = [
        f"bridges: {_edge_text(sorted(bridges(g)))}",
        f"cut vertices: {' '.join(map(str, sorted(dec.cut_vertices))) or '(none)'}",
        f"nontrivial blocks (r={dec.r}):",
        *[f"  {_edge_text(b)}" for b in dec.nontrivial_blocks],
        f"C(G) components (s={forest.s}):",
        *[f"  {_edge_text(c)}" for c in comps],
        f"h = {h}",
        f"block matching: {_edge_text(match)}",
    ]
    _emit(args, records, "\n".join(lines) + "\n")
    return 0


def cmd_complement(args) -> int:
    from .graph import complement

    g = complement(_read_graph(args))
    text = format_graph(g, args.format)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return 0


def cmd_enumerate(args) -> int:
    if args.order is None:
        raise GraphError("enumerate needs --order")
    out = []
    for g in enumerate_graphs(args.kind, args.order):
        text = format_graph(g, args.format)
        out.append(text.rstrip("\n"))
    sep = "\n" if args.format == "graph6" else "\n\n"
    sys.stdout.write(sep.join(out) + "\n")
    return 0


def cmd_ng(args) -> int:
    g = _read_graph(args)
    rec = ng_report(g)
    records = [
        {"record": "graph", "n": g.n, "m": g.m, "graph6": to_graph6(g)},
        {
            "record": "ng",
            "cfc": rec.cfc_g,
            "cfc_complement": rec.cfc_comp,
            "sum": rec.sum,
            "product": rec.product,
            "equality": list(rec.equality_tags),
            "characterization_match": rec.characterization_match,
        },
    ]
    text = (
        f"cfc(G) = {rec.cfc_g}, cfc(complement) = {rec.cfc_comp}\n"
        f"sum = {rec.sum}, product = {rec.product}, equalities: {', '.join(rec.equality_tags) or 'none'}\n"
        f"characterization {'agrees' if rec.characterization_match else 'DISAGREES'}\n"
    )
    _emit(args, records, text)
    return 0 if rec.characterization_match else 1


def cmd_suite(args) -> int:
    report = run_suite(args.name, args.order, args.jobs)
    _emit(args, report_records(report), report_text(report))
    return 0 if report.passed else 1


def cmd_figures(args) -> int:
    names = args.which or list(QUERIES)
    sets = [derive_figure_graphs(name, strict=False) for name in names]
    if args.write:
        FIGURE_DATA.write_text(render_figure_data(sets))
    records = []
    lines = []
    for fs in sets:
        records.append(
            {
                "record": "figure-set",
                "name": fs.name,
                "expected": fs.expected,
                "derived": len(fs.graphs),
                "graphs": [to_graph6(g) for g in fs.graphs],
                "cfc": list(fs.values),
            }
        )
        mark = "ok  " if fs.ok else "FAIL"
        lines.append(f"{mark} {fs.name}: expected {fs.expected}, derived {len(fs.graphs)}")
        lines += [f"       {to_graph6(g)}  cfc={v}" for g, v in zip(fs.graphs, fs.values)]
    ok = all(fs.ok for fs in sets)
    records.append({"record": "result", "passed": ok})
    _emit(args, records, "\n".join(lines) + "\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["graph6", "edgelist"], default="graph6", help="graph text format")
    common.add_argument("--output", choices=["text", "structured"], default="text")
    common.add_argument("--budget", type=int, default=None, help="search-node budget (default 10^8 or $CFC_BUDGET)")
    common.add_argument("--path-cap", type=int, default=None, help="max witness path length when verifying")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for suites")
    common.add_argument("--order", type=int, default=None, help="order cap for suites / enumeration order")

    parser = argparse.ArgumentParser(prog="cfckit", description="Conflict-free connection numbers of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("graph", nargs="?", help="graph text, a file holding it, or '-' for stdin")
        p.set_defaults(func=func)
        return p

    graph_cmd("solve", cmd_solve, "exact cfc with a certificate")
    p = graph_cmd("verify", cmd_verify, "check a coloring and print witnesses or a failing pair")
    p.add_argument("--coloring", help="coloring file: 'n m' then m lines 'u v c'")
    p.add_argument("--colors", help="colours in sorted edge order, e.g. 1,1,1,1,2")
    p = graph_cmd("color", cmd_color, "build a coloring with a named strategy")
    p.add_argument("--strategy", choices=sorted(_STRATEGIES), default="optimal")
    graph_cmd("classify", cmd_classify, "predict cfc from the characterisations")
    graph_cmd("decompose", cmd_decompose, "bridges, blocks, C(G), h and the block matching")
    graph_cmd("complement", cmd_complement, "print the complement graph")
    graph_cmd("ng", cmd_ng, "cfc of a graph and its complement")

    p = sub.add_parser("enumerate", parents=[common], help="list graphs up to isomorphism")
    p.add_argument("--kind", choices=["trees", "connected"], default="connected")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("suite", parents=[common], help="run an exhaustive validation suite")
    p.add_argument("name", choices=sorted(SUITES))
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("figures", parents=[common], help="derive the figure graph sets")
    p.add_argument("--which", action="append", choices=list(QUERIES))
    p.add_argument("--write", action="store_true", help="rewrite the packaged data file")
    p.set_defaults(func=cmd_figures)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = os.environ.get("CFC_BUDGET")
    if args.budget is not None:
        # via the environment so that suite worker processes see it too
        os.environ["CFC_BUDGET"] = str(args.budget)
    try:
        return args.func(args)
    except ResourceExceeded as exc:
        print(f"cfckit: resource limit: {exc}", file=sys.stderr)
        return 2
    except (GraphError, CodecError, SuiteError, OSError) as exc:
        print(f"cfckit: error: {exc}", file=sys.stderr)
        return 2
    finally:
        if saved is None:
            os.environ.pop("CFC_BUDGET", None)
        else:
            os.environ["CFC_BUDGET"] = saved
