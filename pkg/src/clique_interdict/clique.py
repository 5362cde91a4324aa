"""Exact maximum clique and greedy-colouring clique bounds.

The exact search is a Tomita-style branch and bound (MCQ/MCS family):
candidates are greedily coloured, visited from the highest colour down, and
a branch is cut as soon as ``|current| + colour <= |best|``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import ContractError, Graph, bits_of, iter_bits


@dataclass(frozen=True)
class CliqueResult:
    clique: tuple[int, ...]
    size: int
    search_nodes: int
    timed_out: bool = False


class _Stop(Exception):
    pass


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    verts = list(s)
    mask = bits_of(verts)
    for v in verts:
        if not 0 <= v < g.n:
            raise ContractError(f"vertex {v} out of range for n={g.n}")
        if mask & ~g.adj[v] & ~(1 << v):
            return False
    return True


def is_clique_mask(adj: Sequence[int], mask: int) -> bool:
    for v in iter_bits(mask):
        if mask & ~adj[v] & ~(1 << v):
            return False
    return True


def color_classes(adj: Sequence[int], p: int) -> int:
    """Number of colours used by class-at-a-time greedy colouring of ``p``.

    Each class takes vertices in increasing bit order while they stay
    independent; this is a proper colouring so the count bounds omega.
    """
    count = 0
    while p:
        count += 1
        q = p
        while q:
            low = q & -q
            v = low.bit_length() - 1
            p ^= low
            q &= ~adj[v] & ~low
    return count


def _color_sort(p: int, adj: Sequence[int]) -> tuple[list[int], list[int]]:
    order: list[int] = []
    colors: list[int] = []
    color = 0
    while p:
        color += 1
        q = p
        while q:
            low = q & -q
            v = low.bit_length() - 1
            order.append(v)
            colors.append(color)
            p ^= low
            q &= ~adj[v] & ~low
    return order, colors


def degeneracy_order(g: Graph) -> list[int]:
    """Smallest-last vertex order (repeatedly strip a minimum-degree vertex)."""
    deg = [a.bit_count() for a in g.adj]
    alive = g.vertex_mask
    buckets: dict[int, set[int]] = {}
    for v, d in enumerate(deg):
        buckets.setdefault(d, set()).add(v)
    order = []
    d = 0
    for _ in range(g.n):
        d = max(d - 1, 0)
        while not buckets.get(d):
            d += 1
        v = min(buckets[d])
        buckets[d].discard(v)
        order.append(v)
        alive &= ~(1 << v)
        for w in iter_bits(g.adj[v] & alive):
            buckets[deg[w]].discard(w)
            deg[w] -= 1
            buckets.setdefault(deg[w], set()).add(w)
    return order


def greedy_color_bound(g: Graph, order: Sequence[int] | None = None) -> int:
    """Colours used by sequential first-fit colouring along ``order``.

    The default order is the reverse of the smallest-last order, which uses
    at most degeneracy + 1 colours.
    """
    if order is None:
        order = degeneracy_order(g)[::-1]
    classes: list[int] = []
    for v in order:
        nb = g.adj[v]
        for i, cls in enumerate(classes):
            if not cls & nb:
                classes[i] = cls | (1 << v)
                break
        else:
            classes.append(1 << v)
    return len(classes)


def _greedy_clique(adj: Sequence[int], p: int, starts: int = 8) -> list[int]:
    best: list[int] = []
    cand_order = sorted(iter_bits(p), key=lambda v: (-(adj[v] & p).bit_count(), v))
    for s in cand_order[:starts]:
        clique = [s]
        cand = adj[s] & p
        while cand:
            v = max(iter_bits(cand), key=lambda x: ((adj[x] & cand).bit_count(), -x))
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


class _Search:
    def __init__(self, adj, node_budget, deadline):
        self.adj = adj
        self.node_budget = node_budget
        self.deadline = deadline
        self.nodes = 0
        self.best: list[int] = []
        self.cur: list[int] = []

    def expand(self, p: int) -> None:
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise _Stop
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise _Stop
        adj = self.adj
        cur = self.cur
        order, colors = _color_sort(p, adj)
        for i in range(len(order) - 1, -1, -1):
            if len(cur) + colors[i] <= len(self.best):
                return
            v = order[i]
            cur.append(v)
            np_ = p & adj[v]
            if np_:
                self.expand(np_)
            elif len(cur) > len(self.best):
                self.best = cur.copy()
            cur.pop()
            p &= ~(1 << v)


class SolverTimeout(Exception):
    """Raised when a cooperative deadline passes inside a solver."""


def max_clique(
    g: Graph,
    node_budget: int | None = None,
    deadline: float | None = None,
) -> CliqueResult:
    """Maximum clique of ``g``.

    One search node is one call of the recursive expansion.  When
    ``node_budget`` or the monotonic-clock ``deadline`` runs out the best
    clique found so far is returned with ``timed_out=True``.
    """
    return max_clique_in(g.adj, g.vertex_mask, node_budget, deadline)


def max_clique_in(
    adj: Sequence[int],
    within: int,
    node_budget: int | None = None,
    deadline: float | None = None,
) -> CliqueResult:
    """Maximum clique of the subgraph induced by vertex mask ``within``."""
    if not within:
        return CliqueResult((), 0, 0)
    # relabel so bit order is non-increasing degree, ties by id
    verts = sorted(iter_bits(within), key=lambda v: (-(adj[v] & within).bit_count(), v))
    pos = {v: i for i, v in enumerate(verts)}
    local = []
    for v in verts:
        row = 0
        for w in iter_bits(adj[v] & within):
            row |= 1 << pos[w]
        local.append(row)
    full = (1 << len(verts)) - 1

    search = _Search(local, node_budget, deadline)
    search.best = _greedy_clique(local, full)
    timed_out = False
    try:
        if len(verts) > 1000:
            _decomposed(search, local, full)
        else:
            search.expand(full)
    except _Stop:
        timed_out = True
    clique = tuple(sorted(verts[i] for i in search.best))
    return CliqueResult(clique, len(clique), search.nodes, timed_out)


def _decomposed(search: _Search, adj: list[int], full: int) -> None:
    # sparse regime: one subproblem per vertex over its later neighbours in
    # smallest-last order, skipping those that cannot beat the incumbent
    sub = Graph(len(adj), adj)
    order = degeneracy_order(sub)
    later = full
    for v in order:
        later &= ~(1 << v)
        cand = adj[v] & later
        if cand.bit_count() + 1 <= len(search.best):
            continue
        if not cand:
            continue
        search.cur = [v]
        search.expand(cand)
    search.cur = []
