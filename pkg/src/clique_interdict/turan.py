"""Minimum edge deletions that bring ``K_n`` down to clique number ``i``.

By Turán's theorem the densest K_{i+1}-free graph on n vertices is the
balanced complete i-partite graph, so the deletions are exactly the edges
inside the parts: parts of size ``alpha - 1`` and ``alpha`` with
``alpha = ceil(n / i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import ContractError


@dataclass(frozen=True)
class TuranParams:
    n: int
    i: int
    alpha: int
    n_small: int  # parts of size alpha - 1
    n_large: int  # parts of size alpha

    @classmethod
    def of(cls, n: int, i: int) -> "TuranParams":
        if i < 1:
            raise ContractError(f"clique bound must be >= 1, got {i}")
        if n < 0:
            raise ContractError(f"negative size {n}")
        if n == 0:
            return cls(0, i, 0, 0, 0)
        alpha = -(-n // i)
        n_small = i * alpha - n
        n_large = (n - n_small * (alpha - 1)) // alpha
        return cls(n, i, alpha, n_small, n_large)


def _pairs(a: int) -> int:
    return a * (a - 1) // 2


def gamma_clq(n: int, i: int) -> int:
    if i < 1:
        raise ContractError(f"clique bound must be >= 1, got {i}")
    if i >= n:
        return 0
    t = TuranParams.of(n, i)
    return t.n_small * _pairs(t.alpha - 1) + t.n_large * _pairs(t.alpha)


def gamma_clq_inverse_le(sizes: Sequence[int], k: int, p_max: int) -> int:
    """Smallest ``p`` in ``1..p_max`` with ``sum(gamma_clq(s, p)) <= k``.

    The sum is non-increasing in ``p`` so a binary search applies; returns
    ``p_max`` if no smaller value qualifies.
    """
    lo, hi = 1, max(p_max, 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if sum(gamma_clq(s, mid) for s in sizes) <= k:
            hi = mid
        else:
            lo = mid + 1
    return lo
