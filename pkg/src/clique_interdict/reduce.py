"""Optimality-preserving graph reduction given a lower bound ``lb`` on eta.

A vertex whose neighbourhood has clique number <= lb - 2, or an edge whose
common neighbourhood has clique number <= lb - 3, lies in no clique of size
lb and can be dropped without changing eta(G, k).  Three tests of that
condition are applied, cheapest first: plain degree / common-neighbour
counts, a greedy-colouring bound, and an exact (budgeted) maximum clique.
The exact stage also harvests cliques into a pool for the exact phase.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .bounds import estimate_lb
from .clique import SolverTimeout, color_classes, is_clique_mask, max_clique_in
from .graph import Graph, bits_of, iter_bits

DEFAULT_EDGE_NODE_BUDGET = 100_000


class CliquePool:
    """Insertion-ordered, deduplicated set of cliques (sorted vertex tuples)."""

    def __init__(self, cliques=()):
        self._items: dict[tuple[int, ...], None] = {}
        for c in cliques:
            self.add(c)

    def add(self, clique) -> bool:
        key = tuple(sorted(clique))
        if len(key) < 2 or key in self._items:
            return False
        self._items[key] = None
        return True

    def __iter__(self):
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, clique) -> bool:
        return tuple(sorted(clique)) in self._items


@dataclass
class ReductionReport:
    reduced_graph: Graph
    pool: CliquePool
    removed_vertices: int
    removed_edges: int
    lb_used: int
    stage_counters: dict[str, int] = field(default_factory=dict)

    def summary(self) -> dict:
        return {
            "lb": self.lb_used,
            "vertices_removed": self.removed_vertices,
            "edges_removed": self.removed_edges,
            "pool_size": len(self.pool),
            "stage_counters": dict(self.stage_counters),
        }


class _Work:
    """Mutable bitset copy of a graph; removals only."""

    def __init__(self, g: Graph):
        self.n = g.n
        self.adj = list(g.adj)
        self.alive = g.vertex_mask
        self.counters: dict[str, int] = {}

    def bump(self, key: str) -> None:
        self.counters[key] = self.counters.get(key, 0) + 1

    def drop_vertex(self, v: int) -> None:
        for w in iter_bits(self.adj[v]):
            self.adj[w] &= ~(1 << v)
        self.adj[v] = 0
        self.alive &= ~(1 << v)

    def drop_edge(self, u: int, v: int) -> None:
        self.adj[u] &= ~(1 << v)
        self.adj[v] &= ~(1 << u)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, u + 1 + w) for u in iter_bits(self.alive) for w in iter_bits(self.adj[u] >> (u + 1))]


def _peel(w: _Work, lb: int) -> int:
    removed = 0
    vt, et = lb - 2, lb - 3
    changed = True
    while changed:
        changed = False
        if vt >= 1:
            stack = [v for v in iter_bits(w.alive) if w.adj[v].bit_count() <= vt]
            while stack:
                v = stack.pop()
                if not (w.alive >> v) & 1:
                    continue
                nbrs = w.adj[v]
                w.drop_vertex(v)
                w.bump("peel_vertices")
                removed += 1
                for x in iter_bits(nbrs):
                    if w.adj[x].bit_count() <= vt:
                        stack.append(x)
        if et >= 1:
            for u, v in w.edges():
                if (w.adj[u] >> v) & 1 and (w.adj[u] & w.adj[v]).bit_count() <= et:
                    w.drop_edge(u, v)
                    w.bump("peel_edges")
                    removed += 1
                    changed = True
    return removed


def _color(w: _Work, lb: int) -> int:
    removed = 0
    if lb - 2 >= 1:
        for u in list(iter_bits(w.alive)):
            if color_classes(w.adj, w.adj[u]) <= lb - 2:
                w.drop_vertex(u)
                w.bump("color_vertices")
                removed += 1
    if lb - 3 >= 1:
        for u, v in w.edges():
            if (w.adj[u] >> v) & 1 and color_classes(w.adj, w.adj[u] & w.adj[v]) <= lb - 3:
                w.drop_edge(u, v)
                w.bump("color_edges")
                removed += 1
    return removed


def _exact(w: _Work, lb: int, pool: CliquePool, node_budget, deadline) -> int:
    removed = 0
    for u, v in w.edges():
        if not (w.adj[u] >> v) & 1:
            continue
        if deadline is not None and time.monotonic() > deadline:
            raise SolverTimeout("deadline passed during reduction")
        res = max_clique_in(w.adj, w.adj[u] & w.adj[v], node_budget, deadline)
        if res.timed_out:
            w.bump("exact_budget_hits")
        if lb - 3 >= 1 and not res.timed_out and res.size <= lb - 3:
            w.drop_edge(u, v)
            w.bump("exact_edges")
            removed += 1
        else:
            pool.add(res.clique + (u, v))
    return removed


def peel_degree(g: Graph, lb: int) -> Graph:
    """Fixpoint of: drop vertices with degree <= lb-2, edges in <= lb-3 triangles."""
    w = _Work(g)
    _peel(w, lb)
    return Graph(g.n, w.adj, g.labels)


def reduce_color(g: Graph, lb: int) -> Graph:
    """One pass of the colouring-bound vertex rule, then the edge rule."""
    w = _Work(g)
    _color(w, lb)
    return Graph(g.n, w.adj, g.labels)


def reduce_exact_edges(g: Graph, lb: int, node_budget: int | None = DEFAULT_EDGE_NODE_BUDGET, deadline=None):
    """Drop edges whose common neighbourhood has clique number <= lb - 3.

    Returns ``(graph, pool)``.  Edges whose clique search hit the node budget
    are kept, and the best clique found (plus the edge) is pooled.
    """
    w = _Work(g)
    pool = CliquePool()
    _exact(w, lb, pool, node_budget, deadline)
    out = Graph(g.n, w.adj, g.labels)
    return out, _valid_pool(pool, out.adj)


def _valid_pool(pool: CliquePool, adj) -> CliquePool:
    return CliquePool(c for c in pool if is_clique_mask(adj, bits_of(c)))


def preprocess(
    g: Graph,
    k: int,
    lb: int | None = None,
    node_budget: int | None = DEFAULT_EDGE_NODE_BUDGET,
    deadline=None,
) -> ReductionReport:
    """Reduce ``g`` for budget ``k``.

    Runs peel -> colour -> peel -> exact -> peel, and repeats the colour and
    exact stages while they still remove something.  The reduced graph keeps
    only surviving vertices; its ``labels`` are the ids in ``g``.
    """
    if lb is None:
        lb = estimate_lb(g, k)
    w = _Work(g)
    pool = CliquePool()
    _peel(w, lb)
    while True:
        removed = _color(w, lb)
        removed += _peel(w, lb)
        removed += _exact(w, lb, pool, node_budget, deadline)
        removed += _peel(w, lb)
        if not removed:
            break

    keep = list(iter_bits(w.alive))
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for x in iter_bits(w.adj[v]):
            row |= 1 << pos[x]
        adj.append(row)
    reduced = Graph(len(keep), adj, labels=keep)
    remapped = CliquePool(tuple(pos[v] for v in c) for c in pool if all(v in pos for v in c))
    return ReductionReport(
        reduced_graph=reduced,
        pool=_valid_pool(remapped, reduced.adj),
        removed_vertices=g.n - len(keep),
        removed_edges=g.m - reduced.m,
        lb_used=lb,
        stage_counters=w.counters,
    )
