import pytest
from hypothesis import given, strategies as st

from clique_interdict.generators import c_fat
from clique_interdict.clique import max_clique
from clique_interdict.graph import Graph, remove_edges
from clique_interdict.oracle import brute_ebcp, brute_eicp
from clique_interdict.rlcm import SolveOptions, solve_ebcp, solve_eicp

from conftest import graphs
from suites import witness_problem

ABLATIONS = [
    {},
    {"disable_reduce": True},
    {"disable_ub": True},
    {"disable_ordering_cuts": True},
    {"disable_reduce": True, "disable_ub": True, "disable_ordering_cuts": True},
]


@pytest.mark.parametrize("flags", ABLATIONS, ids=lambda f: "+".join(f) or "default")
@given(g=graphs(max_n=10), k=st.integers(0, 6), seed=st.integers(0, 3))
def test_eta_matches_oracle(flags, g, k, seed):
    rep = solve_eicp(g, k, SolveOptions(seed=seed, **flags))
    assert rep.solved
    assert rep.eta == brute_eicp(g, k)[0]
    assert rep.lb <= rep.eta <= rep.ub
    assert witness_problem(g, k, rep.eta, rep.witness) is None


@given(graphs(max_n=8), st.integers(1, 4))
def test_ebcp_matches_oracle(g, p):
    val, blocked = solve_ebcp(g, p)
    assert val == brute_ebcp(g, p)
    assert len(blocked) == val
    assert max_clique(remove_edges(g, blocked)).size <= p


def test_ebcp_cutoff():
    assert solve_ebcp(Graph.complete(5), 2, cutoff=3) == (None, [])


def test_trivial_graphs():
    assert solve_eicp(Graph.empty(0), 3).eta == 0
    assert solve_eicp(Graph.empty(5), 3).eta == 1
    rep = solve_eicp(Graph.complete(2), 1)
    assert rep.eta == 1 and rep.witness == [(0, 1)]


def test_negative_budget_rejected():
    with pytest.raises(ValueError):
        solve_eicp(Graph.complete(3), -1)


def test_time_limit_reports_bounds():
    g = c_fat(200, 2)
    rep = solve_eicp(g, 30, SolveOptions(time_limit=0.0))
    assert rep.status == "timeout" and rep.eta is None
    assert rep.lb <= 19 <= rep.ub


def test_cfat_small_instance():
    rep = solve_eicp(c_fat(200, 1), 20)
    assert rep.eta == 10
    assert witness_problem(c_fat(200, 1), 20, 10, rep.witness) is None


def test_same_seed_same_report():
    g = c_fat(60, 1)
    a = solve_eicp(g, 8, seed=5)
    b = solve_eicp(g, 8, seed=5)
    assert (a.eta, a.witness, a.nodes, a.cuts, a.ub) == (b.eta, b.witness, b.nodes, b.cuts, b.ub)
