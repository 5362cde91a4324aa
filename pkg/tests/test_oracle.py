"""The brute-force oracles, checked on hand-solved graphs and against each other."""

from itertools import combinations

import pytest
from hypothesis import given

from clique_interdict.graph import Graph, remove_edges
from clique_interdict.oracle import (
    OracleLimits,
    OracleRefused,
    all_cliques,
    brute_ebcp,
    brute_eicp,
    brute_gamma_clq,
    brute_omega,
)

from conftest import graphs


def naive_omega(g: Graph) -> int:
    best = 0
    for r in range(1, g.n + 1):
        for s in combinations(range(g.n), r):
            if all(g.has_edge(u, v) for u, v in combinations(s, 2)):
                best = r
                break
    return best


@pytest.mark.parametrize(
    "n,k,eta",
    [
        (4, 0, 4),
        (4, 1, 3),
        (4, 2, 2),  # a perfect matching leaves C4
        (5, 1, 4),
        (5, 2, 3),
        (5, 4, 2),  # K5 minus C5 is C5
        (3, 3, 1),
    ],
)
def test_eicp_on_complete_graphs_by_hand(n, k, eta):
    val, f = brute_eicp(Graph.complete(n), k)
    assert val == eta
    assert len(f) <= k
    assert naive_omega(remove_edges(Graph.complete(n), f)) == eta


def test_eicp_triangles(triangle_pair):
    assert brute_eicp(triangle_pair, 1)[0] == 3
    assert brute_eicp(triangle_pair, 2)[0] == 2


def test_empty_and_edgeless():
    assert brute_eicp(Graph.empty(0), 3) == (0, [])
    assert brute_eicp(Graph.empty(4), 1) == (1, [])


@given(graphs(max_n=8))
def test_brute_omega_matches_naive(g):
    assert brute_omega(g) == naive_omega(g)


@given(graphs(max_n=7))
def test_all_cliques_are_cliques(g):
    for size in range(1, 4):
        for c in all_cliques(g, size):
            assert len(set(c)) == size
            assert all(g.has_edge(u, v) for u, v in combinations(c, 2))


@given(graphs(max_n=7))
def test_ebcp_and_eicp_oracles_agree(g):
    # two oracles, one question: gamma(G, p) <= k iff eta(G, k) <= p
    for p in range(1, 4):
        gamma = brute_ebcp(g, p)
        assert brute_eicp(g, gamma)[0] <= p
        if gamma > 0:
            assert brute_eicp(g, gamma - 1)[0] > p


def test_gamma_clq_brute_small():
    assert [brute_gamma_clq(4, i) for i in range(1, 5)] == [6, 2, 1, 0]


def test_oracle_refuses_big():
    with pytest.raises(OracleRefused):
        brute_eicp(Graph.complete(15), 1)
    with pytest.raises(OracleRefused):
        brute_eicp(Graph.complete(12), 6, OracleLimits(max_enumeration=100))
    with pytest.raises(OracleRefused):
        brute_gamma_clq(9, 2)
