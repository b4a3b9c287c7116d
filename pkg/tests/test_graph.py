import networkx as nx
import pytest
from hypothesis import given, settings

from cfckit.codec import (
    CodecError,
    from_coloring_text,
    from_edge_list,
    from_graph6,
    parse_graph,
    to_coloring_text,
    to_edge_list,
    to_graph6,
)
from cfckit.enumeration import enumerate_graphs
from cfckit.families import (
    FamilySpec,
    complete,
    complete_bipartite,
    cycle,
    display_tag,
    double_star,
    family,
    family_specs_of_order,
    make_family,
    path,
    plus_edge,
    star,
)
from cfckit.graph import GraphError, INFINITE, complement, diameter, graph_from_edge_list, metrics, spanning_bfs_tree

from conftest import any_graphs, to_nx


def test_edge_list_construction():
    tri = graph_from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
    assert tri.m == 3 and tri.is_complete()
    assert graph_from_edge_list(2, [(0, 1), (1, 0)]).m == 1
    with pytest.raises(GraphError):
        graph_from_edge_list(4, [(0, 4)])
    with pytest.raises(GraphError):
        graph_from_edge_list(3, [(1, 1)])


def test_edges_are_sorted_and_normalised():
    g = graph_from_edge_list(4, [(3, 1), (2, 0), (1, 0)])
    assert g.edges == ((0, 1), (0, 2), (1, 3))


def test_complement_examples():
    assert complement(complete(4)).m == 0
    p4 = path(4)
    assert nx.is_isomorphic(to_nx(complement(p4)), to_nx(p4))


@given(any_graphs())
def test_complement_involution(g):
    c = complement(g)
    assert complement(c) == g
    assert c.n == g.n
    assert g.m + c.m == g.n * (g.n - 1) // 2


def test_metrics_examples():
    c5 = metrics(cycle(5))
    assert c5.connected and c5.diameter == 2 and c5.two_edge_connected
    s = metrics(star(5))
    assert s.diameter == 2 and s.max_degree == 4 and s.lambda_is_one
    p = metrics(path(5))
    assert p.diameter == 4 and p.max_degree == 2


def test_diameter_of_disconnected_graph_is_infinite():
    g = graph_from_edge_list(4, [(0, 1), (2, 3)])
    assert diameter(g) == INFINITE
    assert not metrics(g).connected and not metrics(g).two_edge_connected


@given(any_graphs())
def test_metrics_against_networkx(g):
    h = to_nx(g)
    m = metrics(g)
    assert m.connected == (g.n > 0 and nx.is_connected(h))
    if m.connected and g.n > 1:
        assert m.diameter == nx.diameter(h)
        assert m.two_edge_connected == (not any(True for _ in nx.bridges(h)))


def test_spanning_bfs_tree_is_spanning_tree():
    for g in enumerate_graphs("connected", 5):
        t = spanning_bfs_tree(g)
        sub = graph_from_edge_list(g.n, t)
        assert sub.is_tree() and set(t) <= set(g.edges)


# families --------------------------------------------------------------------


def test_family_examples():
    s = make_family(FamilySpec("star", (5,)))
    assert (s.n, s.m, s.max_degree) == (5, 4, 4)
    u5 = family("U", 5)
    assert (u5.n, u5.m, u5.max_degree) == (5, 5, 3)
    assert len(nx.cycle_basis(to_nx(u5))) == 1
    w = family("W2", 7)
    assert (w.n, w.m) == (7, 9)


def test_family_minimum_orders():
    with pytest.raises(GraphError):
        family("U", 4)
    with pytest.raises(GraphError):
        family("W1", 6)
    with pytest.raises(GraphError):
        family("S", 1, 4)
    with pytest.raises(GraphError):
        family("nope", 5)


@pytest.mark.parametrize("n", range(5, 13))
def test_unicyclic_has_one_triangle(n):
    h = to_nx(family("U", n))
    cycles = nx.cycle_basis(h)
    assert len(cycles) == 1 and len(cycles[0]) == 3
    assert nx.is_connected(h)


@pytest.mark.parametrize("n", range(7, 13))
def test_w1_contains_c4(n):
    g = family("W1", n)
    h = to_nx(g)
    assert any(len(c) == 4 for c in nx.cycle_basis(h))
    assert g.n == n and g.m == n


@pytest.mark.parametrize("a,n", [(2, 4), (2, 5), (3, 6), (2, 7), (4, 9)])
def test_double_star_has_diameter_three(a, n):
    g = double_star(a, n)
    assert g.is_tree() and diameter(g) == 3
    assert sorted(g.degrees, reverse=True)[:2] == sorted([a, n - a], reverse=True)


@pytest.mark.parametrize("n", range(7, 12))
def test_fourteen_families_are_distinct_and_connected(n):
    graphs = [family(t, n) for t in [f"U{i}" for i in range(1, 7)] + [f"W{i}" for i in range(1, 9)]]
    assert all(g.n == n and g.is_connected() for g in graphs)
    for i, a in enumerate(graphs):
        for b in graphs[i + 1 :]:
            assert not nx.is_isomorphic(to_nx(a), to_nx(b))


def test_w3_w4_delete_different_k4_edges():
    w2, w3, w4 = family("W2", 8), family("W3", 8), family("W4", 8)
    assert w3.m == w4.m == w2.m - 1
    assert not nx.is_isomorphic(to_nx(w3), to_nx(w4))


def test_plus_edge_defined_only_when_unique():
    assert plus_edge(star(4)).m == 4
    assert plus_edge(complete_bipartite(2, 2)).m == 5
    with pytest.raises(GraphError):
        plus_edge(path(5))
    with pytest.raises(GraphError):
        plus_edge(complete(3))


def test_display_tags():
    assert display_tag(FamilySpec("U3", (7,))) == "U_n^3"
    assert display_tag(FamilySpec("Kbip", (2, 3))) == "K_{2,3}"
    assert display_tag(FamilySpec("S", (2, 6))) == "S_{2,4}"
    assert len(family_specs_of_order(7)) > 14


# codec -----------------------------------------------------------------------


def test_graph6_examples():
    assert to_graph6(complete(3)) == "Bw"
    assert to_graph6(star(4)) == "Cs"
    assert from_graph6(">>graph6<<Bw") == complete(3)


@pytest.mark.parametrize("n", range(1, 7))
def test_graph6_matches_networkx(n):
    for g in enumerate_graphs("connected", n):
        assert to_graph6(g).encode() == nx.to_graph6_bytes(to_nx(g), header=False).strip()


@pytest.mark.parametrize("n", [5, 6])
def test_graph6_round_trip(n):
    for g in enumerate_graphs("connected", n):
        assert from_graph6(to_graph6(g)) == g


def test_graph6_long_form_round_trip():
    g = path(70)
    text = to_graph6(g)
    assert text.startswith("~")
    assert text.encode() == nx.to_graph6_bytes(nx.path_graph(70), header=False).strip()
    assert from_graph6(text) == g


@pytest.mark.parametrize("bad", ["", "B", "Bww", "B\x7f", "Bx", "~?"])
def test_graph6_malformed(bad):
    with pytest.raises(CodecError):
        from_graph6(bad)


def test_edge_list_format():
    assert to_edge_list(path(3)) == "3 2\n0 1\n1 2\n"
    assert from_edge_list("3 2\n0 1\n1 2\n") == path(3)
    assert from_edge_list("# comment\n3 1\n0 2  # trailing\n").edges == ((0, 2),)
    with pytest.raises(CodecError):
        from_edge_list("3 2\n0 1\n")
    with pytest.raises(CodecError):
        from_edge_list("3 x\n")
    with pytest.raises(CodecError):
        parse_graph("Bw", "dot")


def test_coloring_text_round_trip():
    g = cycle(5)
    colours = {e: 1 for e in g.edges}
    colours[(3, 4)] = 2
    text = to_coloring_text(g, colours)
    assert text.splitlines()[0] == "5 5"
    assert from_coloring_text(text) == (g, colours)
    with pytest.raises(CodecError):
        from_coloring_text("3 1\n0 1\n")


@settings(max_examples=200)
@given(any_graphs(max_n=12))
def test_codecs_round_trip_random(g):
    assert from_graph6(to_graph6(g)) == g
    assert from_edge_list(to_edge_list(g)) == g


def test_labelled_count_helper_is_sane():
    # small known values of the connected labelled graph count
    from conftest import labelled_connected_count

    assert [labelled_connected_count(n) for n in range(1, 6)] == [1, 1, 4, 38, 728]
