#!/usr/bin/env python3
"""Random cross-check of the exact solver against the brute-force oracle.

    python scripts/oracle_crosscheck.py --count 500 --max-n 12 --seed 7

Prints one line per disagreement and a summary; exit status 1 if any.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from clique_interdict.clique import max_clique
from clique_interdict.generators import erdos_renyi
from clique_interdict.graph import remove_edges
from clique_interdict.oracle import brute_eicp
from clique_interdict.rlcm import SolveOptions, solve_eicp


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--min-n", type=int, default=6)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--max-k", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--no-reduce", action="store_true")
    ap.add_argument("--no-ub", action="store_true")
    ap.add_argument("--no-perm-cuts", action="store_true")
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    bad = 0
    t_oracle = t_solver = 0.0
    for i in range(args.count):
        n = int(rng.integers(args.min_n, args.max_n + 1))
        rho = float(rng.choice([0.3, 0.5, 0.8]))
        k = int(rng.integers(1, args.max_k + 1))
        g = erdos_renyi(n, rho, int(rng.integers(2**31)))
        t = time.perf_counter()
        eta, _ = brute_eicp(g, k)
        t_oracle += time.perf_counter() - t
        t = time.perf_counter()
        rep = solve_eicp(g, k, SolveOptions(
            seed=i, disable_reduce=args.no_reduce, disable_ub=args.no_ub,
            disable_ordering_cuts=args.no_perm_cuts))
        t_solver += time.perf_counter() - t
        residual = max_clique(remove_edges(g, rep.witness)).size
        if rep.eta != eta or residual != eta or len(rep.witness) > k:
            bad += 1
            print(f"#{i} n={n} rho={rho} k={k}: solver {rep.eta}, oracle {eta}, witness leaves {residual}")
    print(f"{args.count - bad}/{args.count} agree; oracle {t_oracle:.1f}s, solver {t_solver:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
