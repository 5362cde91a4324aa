"""Two-stage exact solver for edge interdiction of the clique number.

Stage one reduces the graph against a combinatorial lower bound and fills a
clique pool.  Stage two walks ``p`` down from ``ub - 1``: each step asks
whether at most ``k`` edge deletions can push the clique number to ``p``,
answering with the block solver on a partial model that grows lazily from
maximum cliques of the residual graph.  The first ``p`` that needs more
than ``k`` deletions gives ``eta = p + 1``.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field

import numpy as np

from . import block
from .block import BlockModel, Status, add_cover, add_ordering
from .bounds import estimate_lb, estimate_ub
from .clique import SolverTimeout, max_clique
from .graph import Edge, Graph, clique_edges, edge, remove_edges
from .reduce import DEFAULT_EDGE_NODE_BUDGET, CliquePool, ReductionReport, preprocess

log = logging.getLogger(__name__)


@dataclass
class SolveOptions:
    seed: int = 0
    time_limit: float | None = None
    disable_reduce: bool = False
    disable_ub: bool = False
    disable_ordering_cuts: bool = False
    edge_node_budget: int | None = DEFAULT_EDGE_NODE_BUDGET


@dataclass
class IterationLog:
    p: int
    covers: int
    orderings: int
    cuts_added: int
    nodes: int
    status: str


@dataclass
class SolveReport:
    eta: int | None
    witness: list[Edge]
    lb: int
    ub: int
    status: str  # "solved" | "timeout"
    k: int
    seed: int
    reduction: dict = field(default_factory=dict)
    iterations: list[IterationLog] = field(default_factory=list)
    nodes: int = 0
    cuts: int = 0
    wall_time: float = 0.0

    @property
    def solved(self) -> bool:
        return self.status == "solved"


class _Separator:
    """Builds partial blocking models from a clique pool for a given p."""

    def __init__(self, g: Graph, pool: CliquePool, rng: np.random.Generator, orderings: bool):
        self.g = g
        self.pool = pool
        self.rng = rng
        self.orderings = orderings
        self._perm: dict[tuple[int, ...], tuple[int, ...]] = {}

    def _order(self, clique: tuple[int, ...]) -> tuple[int, ...]:
        # one random order per clique, kept across rebuilds
        order = self._perm.get(clique)
        if order is None:
            order = tuple(clique[i] for i in self.rng.permutation(len(clique)))
            self._perm[clique] = order
        return order

    def add(self, model: BlockModel, clique, p: int) -> int:
        clique = tuple(sorted(clique))
        added = add_cover(model, clique, p) is not None
        # with |C| = p + 1 an ordering says no more than the cover does
        if self.orderings and len(clique) > p + 1:
            order = self._order(clique)
            added += add_ordering(model, order, p) is not None
            added += add_ordering(model, order[::-1], p) is not None
        return int(added)

    def build(self, p: int) -> BlockModel:
        model = BlockModel(graph=self.g)
        for c in self.pool:
            if len(c) > p:
                self.add(model, c, p)
        return model


def _check_deadline(deadline):
    if deadline is not None and time.monotonic() > deadline:
        raise SolverTimeout("time limit reached")


def solve_eicp(g: Graph, k: int, opts: SolveOptions | None = None, **kw) -> SolveReport:
    """eta(G, k) with a witness deletion set, or best bounds on timeout.

    Witness edges are reported in the ids of ``g``.
    """
    if k < 0:
        raise ValueError("budget k must be non-negative")
    opts = opts or SolveOptions(**kw)
    t0 = time.monotonic()
    deadline = t0 + opts.time_limit if opts.time_limit is not None else None
    rng = np.random.default_rng(opts.seed)
    ub_rng, perm_rng = rng.spawn(2)

    report = SolveReport(eta=None, witness=[], lb=0, ub=0, status="timeout", k=k, seed=opts.seed)
    lb = estimate_lb(g, k)
    report.lb = lb
    report.ub = max(lb, _omega_or_n(g))
    if g.n == 0:
        report.eta, report.ub, report.status = 0, 0, "solved"
        return _finish(report, t0)

    # ids of the working graph back to ids of g
    back = list(range(g.n))
    try:
        if opts.disable_reduce:
            work, pool = g, CliquePool()
            report.reduction = {"vertices_removed": 0, "edges_removed": 0, "pool_size": 0, "lb": lb}
        else:
            red: ReductionReport = preprocess(g, k, lb=lb, node_budget=opts.edge_node_budget, deadline=deadline)
            work, pool = red.reduced_graph, red.pool
            back = list(work.labels)
            report.reduction = red.summary()
        log.debug("reduced to n=%d m=%d, pool=%d", work.n, work.m, len(pool))

        def to_g(edges):
            return sorted(edge(back[u], back[v]) for u, v in edges)

        if opts.disable_ub:
            omega = max_clique(work, deadline=deadline)
            if omega.timed_out:
                raise SolverTimeout("time limit reached")
            ub = omega.size + 1
            witness: list[Edge] | None = None
        else:
            ub, trace = estimate_ub(work, k, ub_rng, deadline=deadline)
            witness = trace.removed
            report.ub = ub
            report.witness = to_g(witness)

        sep = _Separator(work, pool, perm_rng, not opts.disable_ordering_cuts)
        p = ub - 1
        last_blocked: list[Edge] = []
        while p >= lb:
            model = sep.build(p)
            it = IterationLog(p, len(model.covers), len(model.orderings), 0, 0, "")
            report.iterations.append(it)
            while True:
                _check_deadline(deadline)
                sol = block.solve(model, cutoff=k, hint=last_blocked, deadline=deadline, optimize=False)
                it.nodes += sol.nodes
                report.nodes += sol.nodes
                if sol.status is Status.EXCEEDS:
                    it.status = "exceeds"
                    report.eta, report.status = p + 1, "solved"
                    report.ub = p + 1
                    return _finish(report, t0)
                last_blocked = sol.blocked
                res = max_clique(remove_edges(work, sol.blocked), deadline=deadline)
                if res.timed_out:
                    raise SolverTimeout("time limit reached")
                sep.pool.add(res.clique)
                if res.size <= p:
                    it.status = "feasible"
                    witness = sol.blocked
                    report.witness = to_g(witness)
                    report.ub = max(res.size, lb)
                    p = res.size - 1
                    break
                added = sep.add(model, res.clique, p)
                it.cuts_added += added
                report.cuts += added
        report.eta, report.status = lb, "solved"
        report.ub = lb
        if witness is None:
            report.witness = []
        return _finish(report, t0)
    except SolverTimeout:
        log.info("time limit reached with bounds [%d, %d]", report.lb, report.ub)
        report.status = "timeout"
        return _finish(report, t0)


def _omega_or_n(g: Graph) -> int:
    # cheap valid upper bound before any search: k = 0 keeps omega <= max degree + 1
    return max((d.bit_count() for d in g.adj), default=-1) + 1


def _finish(report: SolveReport, t0: float) -> SolveReport:
    report.wall_time = time.monotonic() - t0
    return report


def solve_ebcp(g: Graph, p: int, seed: int = 0, cutoff: int | None = None, deadline=None):
    """gamma(G, p): fewest deletions leaving clique number <= p.

    Raises a lower bound ``c`` one step at a time: each round asks the block
    solver for any blocking of at most ``c`` edges on the partial model, so
    an EXCEEDS answer proves ``gamma > c``.  Returns ``(value, witness)``;
    ``value`` is None when it exceeds ``cutoff``.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    sep = _Separator(g, CliquePool(), np.random.default_rng(seed), True)
    model = BlockModel(graph=g)
    for c in _violated_cliques(g, p, deadline):
        sep.pool.add(c)
        sep.add(model, c, p)
    lo = 0
    hint: list[Edge] = []
    while True:
        if cutoff is not None and lo > cutoff:
            return None, []
        sol = block.solve(model, cutoff=lo, hint=hint, deadline=deadline, optimize=False)
        if sol.status is Status.EXCEEDS:
            lo += 1
            continue
        hint = sol.blocked
        found = _violated_cliques(remove_edges(g, sol.blocked), p, deadline)
        if not found:
            return sol.objective, sol.blocked
        for c in found:
            sep.pool.add(c)
            sep.add(model, c, p)


def _violated_cliques(h: Graph, p: int, deadline, limit: int = 16) -> list[tuple[int, ...]]:
    """Up to ``limit`` edge-disjoint cliques of size > p, largest first."""
    out = []
    while len(out) < limit:
        res = max_clique(h, deadline=deadline)
        if res.timed_out:
            raise SolverTimeout("time limit reached")
        if res.size <= p:
            break
        out.append(res.clique)
        h = remove_edges(h, clique_edges(res.clique))
    return out
