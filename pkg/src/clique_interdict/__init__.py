"""Exact edge interdiction of the clique number."""

from .block import BlockModel, Status
from .bounds import estimate_lb, estimate_ub
from .clique import SolverTimeout, max_clique
from .graph import Graph, GraphFormatError, parse_dimacs, parse_edgelist, remove_edges
from .reduce import preprocess
from .rlcm import SolveOptions, SolveReport, solve_ebcp, solve_eicp
from .turan import gamma_clq

__all__ = [
    "BlockModel", "Graph", "GraphFormatError", "SolveOptions", "SolveReport",
    "SolverTimeout", "Status", "estimate_lb", "estimate_ub", "gamma_clq",
    "max_clique", "parse_dimacs", "parse_edgelist", "preprocess", "remove_edges",
    "solve_ebcp", "solve_eicp",
]

__version__ = "0.1.0"
