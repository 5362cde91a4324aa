from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from clique_interdict.block import (
    BlockModel,
    Status,
    add_cover,
    add_ordering,
    dumps_model,
    is_feasible,
    loads_model,
    open_vertices,
    solve,
)
from clique_interdict.graph import ContractError, Graph
from clique_interdict.oracle import all_cliques, brute_ebcp

from conftest import graphs


def brute_block(model: BlockModel) -> int | None:
    nv = len(model.edge_vars)
    for r in range(nv + 1):
        for bits in combinations(range(nv), r):
            mask = sum(1 << b for b in bits)
            if is_feasible(model, mask):
                return r
    return None


def full_model(g: Graph, p: int, orderings: bool) -> BlockModel:
    model = BlockModel(graph=g)
    for c in all_cliques(g, p + 1):
        add_cover(model, c, p)
        if orderings:
            add_ordering(model, c, p)
    return model


@given(graphs(max_n=7), st.integers(1, 3), st.booleans())
def test_full_model_gives_ebcp(g, p, orderings):
    sol = solve(full_model(g, p, orderings))
    assert sol.status is Status.OPTIMAL
    assert sol.objective == brute_ebcp(g, p)


@given(graphs(min_n=4, max_n=7), st.integers(1, 3), st.data())
def test_partial_model_matches_enumeration(g, p, data):
    model = BlockModel(graph=g)
    for size in (p + 1, p + 2):
        cl = all_cliques(g, size)
        if cl:
            for c in data.draw(st.lists(st.sampled_from(cl), max_size=3)):
                add_cover(model, c, p)
                add_ordering(model, data.draw(st.permutations(c)), p)
    if len(model.edge_vars) > 14:
        return
    expected = brute_block(model)
    sol = solve(model)
    assert sol.objective == expected
    assert is_feasible(model, model.mask_of(sol.blocked))


def test_cutoff_semantics():
    model = full_model(Graph.complete(5), 2, True)
    assert solve(model).objective == 4
    assert solve(model, cutoff=4).status is Status.OPTIMAL
    assert solve(model, cutoff=3).status is Status.EXCEEDS
    sat = solve(model, cutoff=10, optimize=False)
    assert sat.status is Status.FEASIBLE and sat.objective <= 10


def test_vacuous_constraints_filtered():
    model = BlockModel(graph=Graph.complete(4))
    assert add_cover(model, (0, 1, 2), 3) is None
    assert add_ordering(model, (0, 1, 2), 3) is None
    assert add_cover(model, (0, 1, 2), 2) is not None
    assert add_cover(model, (2, 1, 0), 2) is None  # duplicate
    assert solve(model).objective == 1


def test_non_clique_rejected():
    model = BlockModel(graph=Graph.from_edges(3, [(0, 1), (1, 2)]))
    with pytest.raises(ContractError):
        add_cover(model, (0, 1, 2), 1)


def test_open_vertices_counts_unblocked_out_edges():
    model = BlockModel(graph=Graph.complete(3))
    con = add_ordering(model, (0, 1, 2), 2)
    assert open_vertices(con, 0) == 3
    assert open_vertices(con, model.mask_of([(0, 1), (0, 2)])) == 2


def test_model_text_roundtrip():
    model = full_model(Graph.complete(5), 2, True)
    again = loads_model(dumps_model(model), Graph.complete(5))
    assert len(again.covers) == len(model.covers)
    assert len(again.orderings) == len(model.orderings)
    assert solve(again).objective == solve(model).objective


def test_every_ordering_of_k4_is_satisfied_by_turan_blocking():
    g = Graph.complete(4)
    blocked = [(0, 1), (2, 3)]
    for order in permutations(range(4)):
        model = BlockModel(graph=g)
        con = add_ordering(model, order, 2)
        assert open_vertices(con, model.mask_of(blocked)) <= 2
