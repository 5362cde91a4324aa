"""Brute-force ground truth for tiny instances (tests and ``verify`` only).

Nothing here shares code with the production solve path beyond the graph
container.  Everything refuses instances past its enumeration limits rather
than truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graph import Edge, Graph


class OracleRefused(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleLimits:
    max_vertices: int = 14
    max_enumeration: int = 10_000_000


DEFAULT_LIMITS = OracleLimits()


def all_cliques(g: Graph, size: int) -> list[tuple[int, ...]]:
    """Every clique with exactly ``size`` vertices, by plain extension."""
    out = []

    def extend(cur, cand):
        if len(cur) == size:
            out.append(tuple(cur))
            return
        for v in sorted(cand):
            extend(cur + [v], {w for w in cand if w > v and g.has_edge(v, w)})

    if size == 0:
        return [()]
    extend([], set(range(g.n)))
    return out


def brute_omega(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    if g.n > limits.max_vertices:
        raise OracleRefused(f"n={g.n} exceeds oracle limit {limits.max_vertices}")
    best = 0
    for size in range(1, g.n + 1):
        if not all_cliques(g, size):
            break
        best = size
    return best


def _residual_omega_at_most(cliques_edges: list[frozenset], removed: set) -> bool:
    return all(ce & removed for ce in cliques_edges)


def _min_hitting(g: Graph, t: int, max_size: int, limits: OracleLimits):
    """Smallest F (|F| <= max_size) leaving no clique of size t + 1, else None."""
    targets = [frozenset((c[i], c[j]) for i in range(len(c)) for j in range(i + 1, len(c)))
               for c in all_cliques(g, t + 1)]
    if not targets:
        return []
    # an optimal F only uses edges lying in some target clique
    useful = sorted(set().union(*targets))
    seen = 1
    for j in range(1, min(max_size, len(useful)) + 1):
        seen += comb(len(useful), j)
        if seen > limits.max_enumeration:
            raise OracleRefused(f"more than {limits.max_enumeration} subsets to enumerate")
        for f in combinations(useful, j):
            if _residual_omega_at_most(targets, set(f)):
                return list(f)
    return None


def brute_eicp(g: Graph, k: int, limits: OracleLimits = DEFAULT_LIMITS) -> tuple[int, list[Edge]]:
    """eta(G, k) and an optimal deletion set, by exhaustive search."""
    if g.n > limits.max_vertices:
        raise OracleRefused(f"n={g.n} exceeds oracle limit {limits.max_vertices}")
    omega = brute_omega(g, limits)
    best, best_f = omega, []
    for t in range(omega - 1, 0, -1):
        f = _min_hitting(g, t, k, limits)
        if f is None:
            break
        best, best_f = t, f
    return best, sorted(best_f)


def brute_ebcp(g: Graph, p: int, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """gamma(G, p) by exhaustive search over deletion sets of growing size."""
    if p < 1:
        raise ValueError("p must be >= 1")
    if g.n > limits.max_vertices:
        raise OracleRefused(f"n={g.n} exceeds oracle limit {limits.max_vertices}")
    f = _min_hitting(g, p, g.m, limits)
    assert f is not None
    return len(f)


def brute_gamma_clq(n: int, i: int, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Fewest deletions from K_n leaving clique number <= i, by enumeration.

    Unlike the other oracles this walks every edge subset of every size,
    without the target-clique shortcut.
    """
    g = Graph.complete(n)
    edges = g.edges()
    if 2 ** len(edges) > limits.max_enumeration:
        raise OracleRefused(f"K_{n} has too many edge subsets to enumerate")
    targets = [frozenset((c[a], c[b]) for a in range(len(c)) for b in range(a + 1, len(c)))
               for c in all_cliques(g, i + 1)]
    for j in range(len(edges) + 1):
        for f in combinations(edges, j):
            if _residual_omega_at_most(targets, set(f)):
                return j
    raise AssertionError("removing every edge always works")
