"""Loading graphs from disk and turning solve reports into JSON."""

from __future__ import annotations

import math
from fractions import Fraction
from pathlib import Path

from .graph import Graph, GraphFormatError, ParseStats, parse_dimacs, parse_edgelist
from .rlcm import SolveReport

DIMACS_SUFFIXES = {".clq", ".col", ".dimacs", ".b"}


def detect_format(path: str | Path) -> str:
    return "dimacs" if Path(path).suffix.lower() in DIMACS_SUFFIXES else "edgelist"


def load_graph(path: str | Path, fmt: str | None = None, zero_indexed: bool = False,
               stats: ParseStats | None = None) -> Graph:
    fmt = fmt or detect_format(path)
    data = Path(path).read_bytes()
    if fmt == "dimacs":
        return parse_dimacs(data, stats)
    if fmt == "edgelist":
        return parse_edgelist(data, one_indexed=not zero_indexed, stats=stats)
    raise GraphFormatError(f"unknown graph format {fmt!r}")


def k_from_fraction(c, m: int) -> int:
    """``ceil(c * m)`` computed exactly (``c`` may be a decimal string)."""
    return math.ceil(Fraction(str(c)) * m)


def labelled(g: Graph, edges) -> list[list[int]]:
    return [sorted((g.labels[u], g.labels[v])) for u, v in edges]


def report_json(g: Graph, report: SolveReport) -> dict:
    return {
        "eta": report.eta,
        "k": report.k,
        "witness": labelled(g, report.witness),
        "lb": report.lb,
        "ub": report.ub,
        "status": report.status,
        "time_ms": int(round(report.wall_time * 1000)),
        "reduction": {
            "vertices_removed": report.reduction.get("vertices_removed", 0),
            "edges_removed": report.reduction.get("edges_removed", 0),
        },
        "nodes": report.nodes,
        "cuts": report.cuts,
        "seed": report.seed,
    }
