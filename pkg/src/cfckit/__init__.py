"""Exact conflict-free connection numbers of small graphs.

A path is conflict-free when some colour appears on exactly one of its
edges; cfc(G) is the fewest colours that give every vertex pair such a
path.  The package computes cfc exactly with verified certificates, builds
the closed-form colourings, and runs exhaustive checks over enumerated
graphs.
"""

from .codec import format_graph, from_graph6, parse_graph, to_graph6
from .constructions import (
    ClassificationResult,
    classify,
    color_general,
    color_path,
    color_spanning_tree,
    color_two_edge_connected,
)
from .decomposition import BlockDecomposition, CutEdgeForest, block_matching, bridges, cut_edge_forest, decompose
from .enumeration import enumerate_graphs
from .families import FamilySpec, family, family_membership, make_family
from .figures import FigureCardinalityError, derive_figure_graphs
from .graph import Graph, GraphError, complement, graph_from_edge_list, metrics
from .harness import NgRecord, Report, ng_report, run_suite
from .solve import Bounds, SolveResult, bounds, cfc_exact, cfc_tree_exact, exists_coloring, h_value, path_cfc
from .verify import (
    CfcCertificate,
    EdgeColoring,
    ResourceExceeded,
    find_witness,
    path_is_conflict_free,
    verify,
)

__all__ = [
    "BlockDecomposition",
    "Bounds",
    "CfcCertificate",
    "ClassificationResult",
    "CutEdgeForest",
    "EdgeColoring",
    "FamilySpec",
    "FigureCardinalityError",
    "Graph",
    "GraphError",
    "NgRecord",
    "Report",
    "ResourceExceeded",
    "SolveResult",
    "block_matching",
    "bounds",
    "bridges",
    "cfc_exact",
    "cfc_tree_exact",
    "classify",
    "color_general",
    "color_path",
    "color_spanning_tree",
    "color_two_edge_connected",
    "complement",
    "cut_edge_forest",
    "decompose",
    "derive_figure_graphs",
    "enumerate_graphs",
    "exists_coloring",
    "family",
    "family_membership",
    "find_witness",
    "format_graph",
    "from_graph6",
    "graph_from_edge_list",
    "h_value",
    "make_family",
    "metrics",
    "ng_report",
    "parse_graph",
    "path_cfc",
    "path_is_conflict_free",
    "run_suite",
    "to_graph6",
    "verify",
]
