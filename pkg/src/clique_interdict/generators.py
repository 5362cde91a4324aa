"""Instance generators: Erdős–Rényi G(n, rho) and the DIMACS c-fat family."""

from __future__ import annotations

import math

import numpy as np

from .graph import Graph


def erdos_renyi(n: int, density: float, seed: int = 0) -> Graph:
    """G(n, rho): each of the n(n-1)/2 pairs is an edge independently with prob. rho."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < density
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def c_fat(n: int, c: float) -> Graph:
    """c-fat ring graph (the fault-diagnosis family in the DIMACS clique set).

    Vertices are split into ``k = floor(n / (c ln n))`` consecutive groups,
    the first ``n mod k`` one vertex larger.  Each group is a clique and is
    completely joined to the next group around the ring.  ``c_fat(200, 1)``
    and ``c_fat(200, 2)`` reproduce the vertex/edge counts and clique numbers
    of c-fat200-1 (m=1534, omega=12) and c-fat200-2 (m=3235, omega=24).
    """
    k = int(n // (c * math.log(n)))
    if k < 3:
        raise ValueError("too few groups for a ring")
    base, extra = divmod(n, k)
    groups = []
    start = 0
    for i in range(k):
        size = base + (1 if i < extra else 0)
        groups.append(range(start, start + size))
        start += size
    edges = []
    for i, grp in enumerate(groups):
        nxt = groups[(i + 1) % k]
        edges.extend((u, v) for u in grp for v in grp if u < v)
        edges.extend((u, v) for u in grp for v in nxt)
    return Graph.from_edges(n, edges)
