import pytest
from hypothesis import given, settings

from cfckit.decomposition import bridges
from cfckit.enumeration import enumerate_graphs
from cfckit.families import complete, cycle, double_star, family, path, star
from cfckit.graph import GraphError, graph_from_edge_list
from cfckit.solve import (
    bounds,
    ceil_log2,
    cfc_exact,
    component_values,
    default_budget,
    exists_coloring,
    h_value,
    path_cfc,
)
from cfckit.verify import ResourceExceeded, verify

from conftest import brute_cfc, connected_graphs


@pytest.mark.parametrize(
    "g,value",
    [
        (complete(2), 1),
        (complete(5), 1),
        (cycle(5), 2),
        (star(4), 3),
        (star(6), 5),
        (path(4), 2),
        (path(5), 3),
        (path(9), 4),
        (family("U", 5), 2),
        (double_star(3, 6), 3),
        (double_star(3, 7), 4),
    ],
)
def test_known_values(g, value):
    res = cfc_exact(g)
    assert res.value == value
    assert res.certificate.check() and res.coloring.k == value


@pytest.mark.parametrize("n", range(2, 6))
def test_against_brute_force(n):
    for g in enumerate_graphs("connected", n):
        assert cfc_exact(g).value == brute_cfc(g), g.edges


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_n=6, max_n=6))
def test_against_brute_force_order_six(g):
    if g.m <= 9:
        assert cfc_exact(g).value == brute_cfc(g)


def test_path_formula():
    assert [path_cfc(m) for m in range(1, 9)] == [1, 2, 2, 3, 3, 3, 3, 4]
    assert [ceil_log2(x) for x in (1, 2, 3, 4, 5, 8, 9)] == [0, 1, 2, 2, 3, 3, 4]
    with pytest.raises(GraphError):
        path_cfc(0)


def test_exists_coloring_is_exact_on_paths():
    g = path(8)  # 7 edges
    assert exists_coloring(g, 2) is None
    col = exists_coloring(g, 3)
    assert col is not None and verify(g, col).ok


def test_budget_exceeded():
    with pytest.raises(ResourceExceeded):
        exists_coloring(path(16), 3, budget=10)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("CFC_BUDGET", "1234")
    assert default_budget() == 1234
    monkeypatch.setenv("CFC_BUDGET", "5")
    with pytest.raises(ResourceExceeded):
        exists_coloring(path(16), 3)
    monkeypatch.delenv("CFC_BUDGET")
    assert default_budget() == 10**8


def test_invalid_inputs():
    with pytest.raises(GraphError):
        cfc_exact(graph_from_edge_list(3, [(0, 1)]))
    with pytest.raises(GraphError):
        cfc_exact(graph_from_edge_list(1, []))


@settings(max_examples=80, deadline=None)
@given(connected_graphs(max_n=8))
def test_result_lies_within_bounds(g):
    if g.n < 2:
        return
    b = bounds(g)
    res = cfc_exact(g)
    assert b.lower <= res.value <= b.upper
    assert res.lower <= res.value
    assert res.certificate.check()


@settings(max_examples=80, deadline=None)
@given(connected_graphs(max_n=8))
def test_window_around_h(g):
    if not bridges(g) or g.is_tree():
        return
    h = h_value(g)
    assert h == max(component_values(g))
    assert h <= cfc_exact(g).value <= h + 1


@settings(max_examples=60, deadline=None)
@given(connected_graphs(min_n=3, max_n=7))
def test_adding_edges_never_increases(g):
    # a connected spanning subgraph needs at least as many colours
    extra = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    if not extra:
        return
    bigger = g.add_edges(extra[:1])
    assert cfc_exact(bigger).value <= cfc_exact(g).value


def test_bounds_reasons_are_named():
    b = bounds(star(5))
    assert (4, "max-degree") in b.lower_reasons
    assert b.lower == b.upper == 4
    b = bounds(cycle(6))
    assert (2, "two-edge-connected") in b.upper_reasons
    assert bounds(complete(4)).upper == 1
    assert bounds(double_star(3, 8)).tree_estimate is not None
