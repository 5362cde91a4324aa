"""Seeded instance suites shared by the acceptance and unit tests."""

from __future__ import annotations

from dataclasses import dataclass

from clique_interdict.clique import max_clique
from clique_interdict.generators import erdos_renyi
from clique_interdict.graph import Graph, remove_edges

DENSITIES = (0.3, 0.5, 0.8)


@dataclass(frozen=True)
class Instance:
    name: str
    n: int
    density: float
    k: int
    seed: int

    def graph(self) -> Graph:
        return erdos_renyi(self.n, self.density, self.seed)


def oracle_suite(count: int = 200, offset: int = 0) -> list[Instance]:
    """n cycles 6..12, density cycles over DENSITIES, k cycles 1..4."""
    out = []
    for i in range(offset, offset + count):
        n = 6 + i % 7
        rho = DENSITIES[(i // 7) % 3]
        k = 1 + (i // 21) % 4
        out.append(Instance(f"er{i}_n{n}_r{rho}_k{k}", n, rho, k, 1000 + i))
    return out


def witness_problem(g: Graph, k: int, eta: int, witness) -> str | None:
    """None if ``witness`` certifies ``eta``, else a description of the defect."""
    f = {tuple(sorted(e)) for e in witness}
    if len(f) != len(list(witness)):
        return "duplicate witness edges"
    if len(f) > k:
        return f"witness has {len(f)} > k={k} edges"
    if any(not g.has_edge(*e) for e in f):
        return "witness edge not in graph"
    omega = max_clique(remove_edges(g, f)).size
    if omega != eta:
        return f"residual omega {omega} != eta {eta}"
    return None
