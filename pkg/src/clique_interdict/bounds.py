"""Cheap bounds on the interdicted clique number eta(G, k).

``estimate_lb`` packs the vertices into vertex-disjoint cliques; deleting
edges inside each packed clique independently is a relaxation whose optimum
follows from the Turán deletion counts.  ``estimate_ub`` greedily deletes
random edges from the current maximum clique with a doubling step size.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .clique import SolverTimeout, max_clique
from .graph import Edge, Graph, clique_edges, iter_bits, remove_edges
from .turan import gamma_clq_inverse_le


@dataclass
class DisjointCliqueCover:
    cliques: list[tuple[int, ...]]
    delta: int
    adjacency_tests: int = 0


@dataclass
class UbTrace:
    removed: list[Edge] = field(default_factory=list)
    final_clique_size: int = 0
    iterations: list[tuple[int, int]] = field(default_factory=list)


def disjoint_clique_cover(g: Graph) -> DisjointCliqueCover:
    """First-fit: vertex ``v`` joins the earliest clique it is fully adjacent to."""
    masks: list[int] = []
    tests = 0
    for v in range(g.n):
        nb = g.adj[v]
        for i, c in enumerate(masks):
            tests += c.bit_count()
            if c & ~nb == 0:
                masks[i] = c | (1 << v)
                break
        else:
            masks.append(1 << v)
    cliques = [tuple(iter_bits(c)) for c in masks]
    delta = max((len(c) for c in cliques), default=0)
    return DisjointCliqueCover(cliques, delta, tests)


def estimate_lb(g: Graph, k: int) -> int:
    if g.n == 0:
        return 0
    cover = disjoint_clique_cover(g)
    sizes = [len(c) for c in cover.cliques]
    return gamma_clq_inverse_le(sizes, k, cover.delta)


def estimate_ub(g: Graph, k: int, rng_seed: int | np.random.Generator = 0, deadline=None) -> tuple[int, UbTrace]:
    """Upper bound on eta(G, k) with a witness deletion set of size <= k.

    The returned bound is the clique number of the final residual graph.
    """
    def omega_clique(graph):
        res = max_clique(graph, deadline=deadline)
        if res.timed_out:
            raise SolverTimeout("deadline passed in upper-bound heuristic")
        return res.clique

    rng = rng_seed if isinstance(rng_seed, np.random.Generator) else np.random.default_rng(rng_seed)
    trace = UbTrace()
    cur = g
    clique = omega_clique(cur)
    trace.iterations.append((0, len(clique)))
    budget = k
    r = 1
    while budget > 0 and len(clique) >= 2:
        support = clique_edges(clique)
        r = min(r, len(support), budget)
        picks = rng.choice(len(support), size=r, replace=False)
        chosen = [support[i] for i in sorted(picks)]
        cur = remove_edges(cur, chosen)
        trace.removed.extend(chosen)
        budget -= r
        nxt = omega_clique(cur)
        trace.iterations.append((r, len(nxt)))
        r = min(2 * r, len(nxt)) if len(nxt) == len(clique) else 1
        clique = nxt
    trace.final_clique_size = len(clique)
    return len(clique), trace
