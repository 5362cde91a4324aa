from hypothesis import given, strategies as st

from clique_interdict.bounds import estimate_lb
from clique_interdict.clique import is_clique
from clique_interdict.generators import c_fat
from clique_interdict.graph import Graph
from clique_interdict.oracle import brute_eicp
from clique_interdict.reduce import CliquePool, peel_degree, preprocess, reduce_color, reduce_exact_edges

from conftest import graphs


@given(graphs(max_n=10), st.integers(0, 5))
def test_preprocess_keeps_optimum(g, k):
    eta, _ = brute_eicp(g, k)
    rep = preprocess(g, k)
    assert rep.lb_used == estimate_lb(g, k)
    # removed structure only ever held cliques too small to matter
    assert max(rep.lb_used, brute_eicp(rep.reduced_graph, k)[0]) == eta


@given(graphs(max_n=10), st.integers(0, 5))
def test_reduced_graph_is_induced_subgraph_of_kept_labels(g, k):
    rep = preprocess(g, k)
    h = rep.reduced_graph
    for u, v in h.edges():
        assert g.has_edge(h.labels[u], h.labels[v])
    assert rep.removed_vertices == g.n - h.n
    assert rep.removed_edges == g.m - h.m
    assert all(is_clique(h, c) for c in rep.pool)


@given(graphs(max_n=10), st.integers(0, 5))
def test_preprocess_idempotent(g, k):
    rep = preprocess(g, k)
    again = preprocess(rep.reduced_graph, k, lb=rep.lb_used)
    assert again.removed_vertices == 0 and again.removed_edges == 0


@given(graphs(max_n=10), st.integers(3, 6))
def test_single_stages_never_add(g, lb):
    for h in (peel_degree(g, lb), reduce_color(g, lb), reduce_exact_edges(g, lb)[0]):
        assert h.n == g.n
        assert set(h.edges()) <= set(g.edges())


def test_low_lb_disables_rules():
    g = Graph.from_edges(4, [(0, 1), (1, 2)])
    assert peel_degree(g, 2).edges() == g.edges()


def test_cfat_small_budget_reduces():
    g = c_fat(200, 1)
    rep = preprocess(g, 10)
    assert rep.lb_used == 11
    assert rep.removed_vertices > 0


def test_pool_dedupes_and_sorts():
    pool = CliquePool()
    assert pool.add((3, 1, 2))
    assert not pool.add([1, 2, 3])
    assert not pool.add((4,))
    assert list(pool) == [(1, 2, 3)] and (2, 3, 1) in pool
