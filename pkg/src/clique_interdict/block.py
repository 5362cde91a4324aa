"""Exact minimum edge blocking over a materialised set of clique constraints.

A model has one 0/1 variable per edge that appears in some constraint and
two constraint families over cliques ``C`` of the working graph:

* cover: at least ``gamma_clq(|C|, p)`` edges of ``C`` are blocked;
* ordering: for a vertex order of ``C``, call a vertex *open* when none of
  its edges towards later vertices is blocked (the last vertex is always
  open).  At most ``p`` vertices may be open.  If ``C`` kept a clique of
  size ``p + 1`` after blocking, any order placing those vertices last
  leaves all of them open, so the family over all orders is valid.

The open-vertex indicators are determined by the edge variables, so they are
never branched on.  The search is a depth-first branch and bound over edges
with a disjoint-support packing bound.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .clique import SolverTimeout, is_clique
from .graph import ContractError, Edge, Graph, clique_edges, edge, iter_bits
from .turan import gamma_clq


class Status(enum.Enum):
    OPTIMAL = "optimal"
    FEASIBLE = "feasible"  # found within cutoff, optimality not proven
    EXCEEDS = "exceeds"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class CoverConstraint:
    support: tuple[Edge, ...]
    rhs: int
    source_clique: tuple[int, ...]
    mask: int


@dataclass(frozen=True)
class OrderingConstraint:
    order: tuple[int, ...]
    p: int
    out_masks: tuple[int, ...]  # per position: variables of edges to later vertices


@dataclass
class BlockSolution:
    status: Status
    blocked: list[Edge]
    objective: int
    nodes: int


@dataclass
class BlockModel:
    graph: Graph | None = None
    cutoff: int | None = None
    edge_vars: list[Edge] = field(default_factory=list)
    covers: list[CoverConstraint] = field(default_factory=list)
    orderings: list[OrderingConstraint] = field(default_factory=list)

    def __post_init__(self):
        self._index: dict[Edge, int] = {}
        self._keys: set = set()

    def var(self, e: Edge) -> int:
        e = edge(*e)
        idx = self._index.get(e)
        if idx is None:
            if self.graph is not None and not self.graph.has_edge(*e):
                raise ContractError(f"{e} is not an edge of the working graph")
            idx = self._index[e] = len(self.edge_vars)
            self.edge_vars.append(e)
        return idx

    def mask_of(self, edges: Iterable[Edge]) -> int:
        m = 0
        for e in edges:
            idx = self._index.get(edge(*e))
            if idx is not None:
                m |= 1 << idx
        return m

    def edges_of(self, mask: int) -> list[Edge]:
        return sorted(self.edge_vars[i] for i in iter_bits(mask))

    def _check_clique(self, verts: Sequence[int]) -> None:
        if len(set(verts)) != len(verts):
            raise ContractError("repeated vertex in clique")
        if self.graph is not None and not is_clique(self.graph, verts):
            raise ContractError(f"{tuple(verts)} is not a clique of the working graph")


def add_cover(model: BlockModel, clique: Iterable[int], p: int) -> CoverConstraint | None:
    verts = tuple(sorted(clique))
    model._check_clique(verts)
    rhs = gamma_clq(len(verts), p)
    if rhs <= 0 or ("c", verts, rhs) in model._keys:
        return None
    model._keys.add(("c", verts, rhs))
    support = tuple(clique_edges(verts))
    mask = 0
    for e in support:
        mask |= 1 << model.var(e)
    con = CoverConstraint(support, rhs, verts, mask)
    model.covers.append(con)
    return con


def add_ordering(model: BlockModel, order: Sequence[int], p: int) -> OrderingConstraint | None:
    order = tuple(order)
    model._check_clique(order)
    if len(order) <= p or ("o", order, p) in model._keys:
        return None
    model._keys.add(("o", order, p))
    outs = []
    for i, u in enumerate(order):
        m = 0
        for v in order[i + 1:]:
            m |= 1 << model.var((u, v))
        outs.append(m)
    con = OrderingConstraint(order, p, tuple(outs))
    model.orderings.append(con)
    return con


def open_vertices(con: OrderingConstraint, blocked_mask: int) -> int:
    """Number of vertices with no blocked outgoing edge (the forced z-sum)."""
    return sum(1 for m in con.out_masks if not m & blocked_mask)


def is_feasible(model: BlockModel, blocked_mask: int) -> bool:
    for c in model.covers:
        if (c.mask & blocked_mask).bit_count() < c.rhs:
            return False
    return all(open_vertices(o, blocked_mask) <= o.p for o in model.orderings)


class _Engine:
    def __init__(self, model: BlockModel, deadline, node_limit):
        self.covers = [(c.mask, c.rhs) for c in model.covers]
        # the last vertex has no outgoing edge; it is always open
        self.orders = [(o.out_masks[:-1], len(o.order) - o.p) for o in model.orderings]
        self.all = (1 << len(model.edge_vars)) - 1
        self.deadline = deadline
        self.node_limit = node_limit
        self.nodes = 0

    def active(self, ones: int, zeros: int):
        """Unmet constraints as (deficit, free support); None if infeasible."""
        free = self.all & ~(ones | zeros)
        out = []
        for mask, rhs in self.covers:
            d = rhs - (mask & ones).bit_count()
            if d > 0:
                s = mask & free
                if s.bit_count() < d:
                    return None
                out.append((d, s))
        for outs, need in self.orders:
            open_ = [om & free for om in outs if not om & ones]
            d = need - (len(outs) - len(open_))
            if d > 0:
                frees = [f for f in open_ if f]
                if len(frees) < d:
                    return None
                s = 0
                for f in frees:
                    s |= f
                out.append((d, s))
        return out

    @staticmethod
    def packing_bound(active) -> int:
        # supports minus everything already charged are disjoint, so each
        # constraint contributes its deficit less the overlap it could reuse
        bound = 0
        used = 0
        for d, s in sorted(active, key=lambda t: (t[1].bit_count() / t[0], -t[0])):
            gain = d - (s & used).bit_count()
            if gain > 0:
                bound += gain
                used |= s
        return bound

    def greedy(self, ones: int) -> int | None:
        while True:
            act = self.active(ones, 0)
            if act is None:
                return None
            if not act:
                return ones
            counts: dict[int, int] = {}
            for d, s in act:
                for b in iter_bits(s):
                    counts[b] = counts.get(b, 0) + 1
            b = max(counts, key=lambda x: (counts[x], -x))
            ones |= 1 << b

    def trim(self, ones: int) -> int:
        for b in sorted(iter_bits(ones), reverse=True):
            cand = ones & ~(1 << b)
            if self.active(cand, 0) == []:
                ones = cand
        return ones

    @staticmethod
    def branch_var(act) -> int:
        # tightest constraint (deficit per free edge), then its edge carrying
        # the most deficit weight across all unmet constraints
        _, s0 = max(act, key=lambda t: (t[0] / t[1].bit_count(), -t[1].bit_count()))
        weight: dict[int, float] = {}
        for b in iter_bits(s0):
            bit = 1 << b
            weight[b] = sum(d / s.bit_count() for d, s in act if s & bit)
        return max(weight, key=lambda x: (weight[x], -x))

    def tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise SolverTimeout("block solver node limit reached")
        if self.deadline is not None and self.nodes & 255 == 0 and time.monotonic() > self.deadline:
            raise SolverTimeout("deadline passed in block solver")

    def search(self, limit: int, first_only: bool) -> int | None:
        """Best blocked mask with popcount < ``limit``, or None."""
        best = None
        stack = [(0, 0)]
        while stack:
            ones, zeros = stack.pop()
            self.tick()
            cost = ones.bit_count()
            if cost >= limit:
                continue
            act = self.active(ones, zeros)
            if act is None:
                continue
            if not act:
                best, limit = ones, cost
                if first_only:
                    return best
                continue
            # a cover whose free support equals its deficit is fully forced
            forced = 0
            for d, s in act:
                if s.bit_count() == d and d > 0:
                    forced |= s
            if forced:
                if (ones | forced).bit_count() < limit:
                    stack.append((ones | forced, zeros))
                continue
            if cost + self.packing_bound(act) >= limit:
                continue
            bit = 1 << self.branch_var(act)
            stack.append((ones, zeros | bit))
            stack.append((ones | bit, zeros))
        return best


def solve(
    model: BlockModel,
    cutoff: int | None = None,
    hint: Iterable[Edge] = (),
    deadline: float | None = None,
    node_limit: int | None = None,
    optimize: bool = True,
) -> BlockSolution:
    """Minimum number of blocked edges satisfying every constraint.

    ``cutoff`` (default ``model.cutoff``) is inclusive: EXCEEDS means every
    feasible blocking uses at least ``cutoff + 1`` edges.  ``hint`` seeds
    the greedy incumbent.  With ``optimize=False`` any blocking within the
    cutoff is returned as FEASIBLE.
    """
    cutoff = model.cutoff if cutoff is None else cutoff
    eng = _Engine(model, deadline, node_limit)
    inc = eng.greedy(model.mask_of(hint))
    if inc is None:
        return BlockSolution(Status.INFEASIBLE, [], -1, eng.nodes)
    inc = eng.trim(inc)
    inc_val = inc.bit_count()

    if cutoff is not None and inc_val > cutoff:
        limit, inc = cutoff + 1, None
    else:
        if not optimize:
            return BlockSolution(Status.FEASIBLE, model.edges_of(inc), inc_val, eng.nodes)
        limit = inc_val

    found = eng.search(limit, first_only=not optimize)
    if found is not None:
        inc = found
    if inc is None:
        status = Status.EXCEEDS if cutoff is not None else Status.INFEASIBLE
        return BlockSolution(status, [], -1, eng.nodes)
    status = Status.OPTIMAL if optimize else Status.FEASIBLE
    return BlockSolution(status, model.edges_of(inc), inc.bit_count(), eng.nodes)


def dumps_model(model: BlockModel) -> str:
    """Line format: ``cover <rhs> <v...>`` / ``order <p> <v...>``."""
    lines = [f"cutoff {model.cutoff}"] if model.cutoff is not None else []
    lines += [f"cover {c.rhs} " + " ".join(map(str, c.source_clique)) for c in model.covers]
    lines += [f"order {o.p} " + " ".join(map(str, o.order)) for o in model.orderings]
    return "\n".join(lines) + "\n"


def loads_model(text: str, graph: Graph | None = None) -> BlockModel:
    model = BlockModel(graph=graph)
    for line in text.splitlines():
        tok = line.split()
        if not tok:
            continue
        if tok[0] == "cutoff":
            model.cutoff = int(tok[1])
        elif tok[0] == "cover":
            verts = tuple(int(t) for t in tok[2:])
            model._check_clique(verts)
            rhs = int(tok[1])
            support = tuple(clique_edges(verts))
            mask = 0
            for e in support:
                mask |= 1 << model.var(e)
            model.covers.append(CoverConstraint(support, rhs, verts, mask))
        elif tok[0] == "order":
            add_ordering(model, [int(t) for t in tok[2:]], int(tok[1]))
        else:
            raise ValueError(f"unknown model line {line!r}")
    return model
