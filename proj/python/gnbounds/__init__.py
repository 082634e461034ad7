"""Certified bounds on guessing numbers of graphs."""

import json
from fractions import Fraction

from . import _gnb
from ._gnb import (
    ConstructionFault,
    Graph,
    InvalidInput,
    ResourceLimit,
    builtin_graph,
    builtin_graph_names,
    clique_cover_strategy,
    complete_graph,
    cycle_graph,
    design_blocks,
    independent_set,
    is_triangle_free,
    load_graph,
    path_graph,
    rank,
    row_space_basis,
    srg_parameters,
    uniform_blowup,
    verify_spanning_set,
    verify_steiner,
)

__all__ = [
    "ConstructionFault", "Graph", "InvalidInput", "ResourceLimit", "bounds_report", "builtin_graph",
    "builtin_graph_names", "clique_cover_strategy", "complete_graph", "cycle_graph", "design_blocks",
    "eval_strategy", "exhaustive_optimal", "independent_set", "is_triangle_free", "kappa_f", "load_graph",
    "path_graph", "rank", "row_space_basis", "run_cli", "srg_parameters", "uniform_blowup",
    "verify_spanning_set", "verify_steiner",
]


def _evaluation(d):
    d["probability"] = Fraction(d["probability"])
    if isinstance(d["gn"], str):
        d["gn"] = Fraction(d["gn"])
    return d


def kappa_f(g, method="auto"):
    """Returns (value, cover) with the cover as [(clique, weight), ...]."""
    value, cover = _gnb.kappa_f(g, method)
    return Fraction(value), [(clique, Fraction(w)) for clique, w in cover]


def eval_strategy(g, s, tables, threads=1):
    return _evaluation(_gnb.eval_strategy(g, s, tables, threads))


def exhaustive_optimal(g, s, symmetry=True, threads=1):
    return _evaluation(_gnb.exhaustive_optimal(g, s, symmetry, threads))


def bounds_report(g, graph_id="graph"):
    return json.loads(_gnb.bounds_report(g, graph_id))


def run_cli(*args):
    """Runs the gnb command line in-process; returns (exit_code, stdout, stderr)."""
    return _gnb.run_cli([str(a) for a in args])
