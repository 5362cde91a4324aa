"""``clique-interdict`` command line.

Exit status: 0 success, 1 usage / input error (or a failed ``verify``),
2 time limit reached.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import bench
from .bounds import estimate_lb, estimate_ub
from .clique import max_clique
from .fileio import k_from_fraction, labelled, load_graph, report_json
from .generators import c_fat, erdos_renyi
from .graph import GraphFormatError, edge, remove_edges, write_dimacs
from .reduce import preprocess
from .rlcm import SolveOptions, solve_ebcp, solve_eicp

TIME_LIMIT_ENV = "CLIQUE_INTERDICT_TIME_LIMIT"

EXIT_OK, EXIT_ERROR, EXIT_TIMEOUT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    graph_path: str | None = None
    format: str | None = None
    k: int | None = None
    k_frac: str | None = None
    p: int | None = None
    seed: int = 0
    time_limit_secs: float | None = None
    no_reduce: bool = False
    no_ub: bool = False
    no_perm_cuts: bool = False
    output: str = "json"
    zero_indexed: bool = False

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        cfg = cls(command=args.command)
        for name in cls.__dataclass_fields__:
            if name != "command" and hasattr(args, name):
                setattr(cfg, name, getattr(args, name))
        if cfg.time_limit_secs is None and os.environ.get(TIME_LIMIT_ENV):
            cfg.time_limit_secs = float(os.environ[TIME_LIMIT_ENV])
        return cfg

    def options(self) -> SolveOptions:
        return SolveOptions(
            seed=self.seed,
            time_limit=self.time_limit_secs,
            disable_reduce=self.no_reduce,
            disable_ub=self.no_ub,
            disable_ordering_cuts=self.no_perm_cuts,
        )

    def budget(self, m: int) -> int:
        if (self.k is None) == (self.k_frac is None):
            raise UsageError("give exactly one of --k / --k-frac")
        k = self.k if self.k is not None else k_from_fraction(self.k_frac, m)
        if k < 0:
            raise UsageError("budget must be non-negative")
        return k


def _emit(cfg: RunConfig, payload: dict) -> None:
    if cfg.output == "text":
        for key, val in payload.items():
            print(f"{key}: {val}")
    else:
        print(json.dumps(payload))


def cmd_solve(cfg: RunConfig) -> int:
    g = load_graph(cfg.graph_path, cfg.format, cfg.zero_indexed)
    k = cfg.budget(g.m)
    rep = solve_eicp(g, k, cfg.options())
    _emit(cfg, report_json(g, rep))
    return EXIT_OK if rep.solved else EXIT_TIMEOUT


def cmd_ebcp(cfg: RunConfig, cutoff: int | None) -> int:
    g = load_graph(cfg.graph_path, cfg.format, cfg.zero_indexed)
    if cfg.p is None or cfg.p < 1:
        raise UsageError("--p must be >= 1")
    deadline = time.monotonic() + cfg.time_limit_secs if cfg.time_limit_secs else None
    value, blocked = solve_ebcp(g, cfg.p, seed=cfg.seed, cutoff=cutoff, deadline=deadline)
    _emit(cfg, {
        "p": cfg.p,
        "gamma": value if value is not None else "exceeds",
        "cutoff": cutoff,
        "witness": labelled(g, blocked),
    })
    return EXIT_OK


def cmd_maxclique(cfg: RunConfig, node_budget: int | None) -> int:
    g = load_graph(cfg.graph_path, cfg.format, cfg.zero_indexed)
    res = max_clique(g, node_budget=node_budget)
    _emit(cfg, {
        "size": res.size,
        "clique": sorted(g.labels[v] for v in res.clique),
        "nodes": res.search_nodes,
        "timed_out": res.timed_out,
    })
    return EXIT_OK


def cmd_reduce(cfg: RunConfig) -> int:
    g = load_graph(cfg.graph_path, cfg.format, cfg.zero_indexed)
    k = cfg.budget(g.m)
    rep = preprocess(g, k)
    _emit(cfg, {
        "n_before": g.n,
        "m_before": g.m,
        "n_after": rep.reduced_graph.n,
        "m_after": rep.reduced_graph.m,
        "lb": rep.lb_used,
        "pool_size": len(rep.pool),
        "stage_counters": rep.stage_counters,
    })
    return EXIT_OK


def cmd_bounds(cfg: RunConfig) -> int:
    g = load_graph(cfg.graph_path, cfg.format, cfg.zero_indexed)
    k = cfg.budget(g.m)
    ub, trace = estimate_ub(g, k, cfg.seed)
    _emit(cfg, {
        "lb": estimate_lb(g, k),
        "ub": ub,
        "witness_size": len(trace.removed),
        "witness": labelled(g, trace.removed),
    })
    return EXIT_OK


def _parse_witness(spec: str, label_to_id: dict[int, int]) -> list[tuple[int, int]]:
    path = Path(spec)
    if path.is_file():
        text = path.read_text()
        try:
            data = json.loads(text)
            pairs = data["witness"] if isinstance(data, dict) else data
        except json.JSONDecodeError:
            pairs = [line.split() for line in text.splitlines() if line.strip()]
    else:
        pairs = [item.replace("-", " ").split() for item in spec.split(",") if item.strip()]
    out = []
    for pair in pairs:
        a, b = (int(x) for x in pair)
        if a not in label_to_id or b not in label_to_id:
            raise UsageError(f"witness edge {a}-{b} uses an unknown vertex label")
        out.append(edge(label_to_id[a], label_to_id[b]))
    return out


def cmd_verify(cfg: RunConfig, claimed_eta: int, witness_spec: str) -> int:
    g = load_graph(cfg.graph_path, cfg.format, cfg.zero_indexed)
    k = cfg.budget(g.m)
    f = _parse_witness(witness_spec, {lab: i for i, lab in enumerate(g.labels)})
    result = {"k": k, "witness_size": len(set(f)), "claimed_eta": claimed_eta}
    missing = [e for e in f if not g.has_edge(*e)]
    if missing:
        result.update(valid=False, reason=f"{len(missing)} witness edges are not in the graph")
    elif len(set(f)) > k:
        result.update(valid=False, reason="witness larger than budget")
    else:
        omega = max_clique(remove_edges(g, set(f))).size
        result["residual_omega"] = omega
        result["valid"] = omega == claimed_eta
        if omega != claimed_eta:
            result["reason"] = "residual clique number differs from the claim"
    _emit(cfg, result)
    return EXIT_OK if result["valid"] else EXIT_ERROR


def cmd_gen(args) -> int:
    if args.family == "cfat":
        g = c_fat(args.n, args.c)
        note = f"c-fat n={args.n} c={args.c}"
    else:
        if args.n < 1:
            raise UsageError("--n must be >= 1")
        g = erdos_renyi(args.n, args.density, args.seed)
        note = f"G(n={args.n}, p={args.density}) seed={args.seed}"
    text = write_dimacs(g, [note])
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return EXIT_OK


def cmd_bench(cfg: RunConfig, args) -> int:
    flags = {
        "disable_reduce": cfg.no_reduce,
        "disable_ub": cfg.no_ub,
        "disable_ordering_cuts": cfg.no_perm_cuts,
    }
    rows = bench.run_manifest(args.manifest, args.out, args.workers, flags)
    print(json.dumps({"rows": len(rows), "out": str(args.out)}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="clique-interdict", description="Edge interdiction of the clique number.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_args(sp):
        sp.add_argument("--graph", dest="graph_path", required=True)
        sp.add_argument("--format", choices=["dimacs", "edgelist"], default=None,
                        help="default: by extension (.clq/.col/.dimacs are DIMACS)")
        sp.add_argument("--zero-indexed", action="store_true",
                        help="edge-list labels may start at 0")
        sp.add_argument("--output", choices=["json", "text"], default="json")

    def budget_args(sp, required=True):
        grp = sp.add_mutually_exclusive_group(required=required)
        grp.add_argument("--k", type=int)
        grp.add_argument("--k-frac", dest="k_frac", help="budget ceil(c * |E|)")

    def run_args(sp):
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--time-limit", dest="time_limit_secs", type=float, default=None,
                        help=f"seconds (default ${TIME_LIMIT_ENV} or none)")
        sp.add_argument("--no-reduce", action="store_true")
        sp.add_argument("--no-ub", action="store_true")
        sp.add_argument("--no-perm-cuts", action="store_true")

    sp = sub.add_parser("solve", help="compute eta(G, k) with a witness")
    graph_args(sp)
    budget_args(sp)
    run_args(sp)

    sp = sub.add_parser("ebcp", help="fewest deletions leaving clique number <= p")
    graph_args(sp)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--cutoff", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--time-limit", dest="time_limit_secs", type=float, default=None)

    sp = sub.add_parser("maxclique", help="exact maximum clique")
    graph_args(sp)
    sp.add_argument("--node-budget", type=int, default=None)

    sp = sub.add_parser("reduce", help="run the reduction and report its effect")
    graph_args(sp)
    budget_args(sp)

    sp = sub.add_parser("bounds", help="lower / upper bounds on eta(G, k)")
    graph_args(sp)
    budget_args(sp)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("verify", help="check a claimed eta and witness")
    graph_args(sp)
    budget_args(sp)
    sp.add_argument("--claimed-eta", type=int, required=True)
    sp.add_argument("--witness", required=True,
                    help="'u-v,u-v', a file of 'u v' lines, or a solve JSON report")

    sp = sub.add_parser("gen", help="write a random or c-fat instance as DIMACS")
    sp.add_argument("--family", choices=["er", "cfat"], default="er")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--density", type=float, default=0.5, help="independent edge probability")
    sp.add_argument("--c", type=float, default=1.0, help="c-fat group parameter")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("bench", help="run a manifest into a CSV table")
    sp.add_argument("--manifest", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--workers", type=int, default=None)
    sp.add_argument("--no-reduce", action="store_true")
    sp.add_argument("--no-ub", action="store_true")
    sp.add_argument("--no-perm-cuts", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * args.verbose, format="%(levelname)s %(name)s: %(message)s")
    cfg = RunConfig.from_args(args)
    try:
        if args.command == "solve":
            return cmd_solve(cfg)
        if args.command == "ebcp":
            return cmd_ebcp(cfg, args.cutoff)
        if args.command == "maxclique":
            return cmd_maxclique(cfg, args.node_budget)
        if args.command == "reduce":
            return cmd_reduce(cfg)
        if args.command == "bounds":
            return cmd_bounds(cfg)
        if args.command == "verify":
            return cmd_verify(cfg, args.claimed_eta, args.witness)
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "bench":
            return cmd_bench(cfg, args)
    except (OSError, GraphFormatError, UsageError, ValueError) as exc:
        print(f"clique-interdict: {exc}", file=sys.stderr)
        return EXIT_ERROR
    parser.error(f"unknown command {args.command}")
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
