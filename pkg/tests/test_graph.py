import pytest
from hypothesis import given, strategies as st

from clique_interdict.graph import (
    ContractError,
    Graph,
    GraphFormatError,
    ParseStats,
    add_edges,
    common_neighbors,
    edge,
    induced_subgraph,
    parse_dimacs,
    parse_edgelist,
    remove_edges,
    write_dimacs,
)

from conftest import graphs


def test_dimacs_basic():
    text = "c comment\np edge 4 3\ne 1 2\ne 2 3\ne 4 1\n"
    g = parse_dimacs(text)
    assert (g.n, g.m) == (4, 3)
    assert g.edges() == ((0, 1), (0, 3), (1, 2))
    assert g.labels == (1, 2, 3, 4)


def test_dimacs_duplicates_counted():
    stats = ParseStats()
    g = parse_dimacs(b"p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n", stats)
    assert g.m == 2
    assert stats.duplicates == 1


@pytest.mark.parametrize(
    "text,needle",
    [
        ("p edge 3 1\ne 1 1\n", "line 2"),
        ("p edge 3 1\ne 1 4\n", "line 2"),
        ("p edge 3 1\ne 1\n", "line 2"),
        ("e 1 2\n", "line 1"),
    ],
)
def test_dimacs_errors_name_the_line(text, needle):
    with pytest.raises(GraphFormatError, match=needle):
        parse_dimacs(text)


def test_edgelist_relabels_and_drops_loops():
    stats = ParseStats()
    g = parse_edgelist("10 20\n20 30\n30 30\n# x\n10 20\n", stats=stats)
    assert (g.n, g.m) == (3, 2)
    assert g.labels == (10, 20, 30)
    assert stats.self_loops == 1 and stats.duplicates == 1


def test_edgelist_one_indexed_rejects_zero():
    with pytest.raises(GraphFormatError):
        parse_edgelist("0 1\n", one_indexed=True)


@given(graphs())
def test_dimacs_roundtrip(g):
    h = parse_dimacs(write_dimacs(g, ["roundtrip"]))
    assert h.n == g.n and h.edges() == g.edges()


@given(graphs(min_n=2), st.data())
def test_remove_then_add_restores(g, data):
    edges = g.edges()
    f = data.draw(st.lists(st.sampled_from(edges), unique=True)) if edges else []
    h = remove_edges(g, f)
    assert h.m == g.m - len(f)
    assert all(not h.has_edge(*e) for e in f)
    assert add_edges(h, f).edges() == g.edges()
    h.check()


def test_remove_non_edge_is_contract_error(triangle_pair):
    with pytest.raises(ContractError):
        remove_edges(triangle_pair, [(0, 3)])


def test_induced_subgraph_labels(triangle_pair):
    h = induced_subgraph(triangle_pair, [2, 3, 4])
    assert h.n == 3 and h.m == 3
    assert h.labels == (2, 3, 4)


def test_common_neighbors_and_edge(triangle_pair):
    assert common_neighbors(triangle_pair, 0, 1) == {2}
    assert edge(5, 2) == (2, 5)
    with pytest.raises(ContractError):
        edge(1, 1)


def test_density_and_degree():
    g = Graph.complete(5)
    assert g.density() == 1.0
    assert g.degree(3) == 4
    assert Graph.empty(3).density() == 0.0
