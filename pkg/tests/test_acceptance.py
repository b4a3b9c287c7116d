"""Acceptance criteria 1-9, one test each; the summary prints PASS/FAIL per criterion."""

import subprocess
import sys

import pytest

from cfckit.figures import derive_figure_graphs
from cfckit.harness import report_records, run_suite, structured

criterion = pytest.mark.criterion


def assert_clean(report):
    lines = [f"{v.tag}: {v.graph6} {v.detail}" for v in report.violations]
    assert report.passed, "\n".join(lines)
    assert all(c.tested > 0 for c in report.checks)


@criterion(1, "path formula exact for m=1..10; ruler colouring verifies with that many colours for m=1..64", "exact")
def test_path_formula():
    report = run_suite("path", order=11)
    assert report.items == 64
    assert {c.tag: c.tested for c in report.checks}["exact-value"] == 10
    assert_clean(report)


@criterion(2, "cfc(T)=n-t iff max degree n-t over all trees of order 6..9", "zero violations")
def test_tree_threshold():
    assert_clean(run_suite("thm-3.1", order=9, jobs=2))


@criterion(3, "characterisations cfc in {1, n-1, n-2, n-3, n-4} over connected graphs n<=7", "exact set equality")
def test_characterizations():
    assert_clean(run_suite("characterizations", order=7, jobs=2))


@criterion(4, "figure cardinalities: 5 (1 with cfc 4), 5/5 split at order 8, 7 trees with cfc 4", "exact counts")
def test_figure_cardinalities():
    fig2 = derive_figure_graphs("fig2-trees")
    assert len(fig2.graphs) == 5 and fig2.values.count(4) == 1
    assert len(derive_figure_graphs("G6").graphs) == 1
    high, low = derive_figure_graphs("H1-H5"), derive_figure_graphs("H6-H10")
    assert len(high.graphs) == 5 and len(low.graphs) == 5
    fig4 = derive_figure_graphs("fig4-trees")
    assert len(fig4.graphs) == 7 and set(fig4.values) == {4}


@criterion(5, "window h<=cfc<=h+1, block-count, single-block and unique-max-component bounds, n<=7", "zero violations")
def test_cut_edge_bounds():
    assert_clean(run_suite("lemma-2.6", order=7, jobs=2))


@criterion(6, "two-colour construction and block matching on all connected graphs n<=7", "exact")
def test_two_edge_connected_construction():
    assert_clean(run_suite("cor-2.5", order=7, jobs=2))


@criterion(7, "complement sum and product bounds with equality cases, and the far-complement cut-edge equivalence, n<=7", "exact")
def test_nordhaus_gaddum():
    ng = run_suite("thm-5.1", order=7, jobs=2)
    assert_clean(ng)
    assert_clean(run_suite("thm-5.7", order=7, jobs=2))


@criterion(8, "no colouring with cfc-1 colours for any connected graph n<=6", "exact")
def test_oracle_optimality():
    assert_clean(run_suite("optimality", order=6, jobs=2))


def cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "cfckit", *argv, "--output", "structured"], capture_output=True)
    return proc.returncode, proc.stdout


@criterion(9, "repeated suite and solve runs give byte-identical structured output", "byte-identical")
def test_determinism():
    for argv in (["solve", "FhCKG"], ["suite", "lemma-2.6", "--order", "6"], ["suite", "figures", "--order", "8"]):
        first, second = cli(*argv), cli(*argv)
        assert first == second, argv
        assert first[1].startswith(b"cfc-kit/1\n")
    serial = structured(report_records(run_suite("thm-5.1", order=6, jobs=1)))
    parallel = structured(report_records(run_suite("thm-5.1", order=6, jobs=3)))
    assert serial == parallel
