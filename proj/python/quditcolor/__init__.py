"""Grover k-coloring oracle synthesis and exact mixed-radix simulation."""

import json as _json

from ._core import (
    Graph,
    ResourceError,
    ValidationError,
    count_solutions,
    decompose_mct_binary_netlist,
    decompose_mct_qudit_netlist,
    decompose_netlist,
    marked_states,
    normalize_netlist,
    optimal_iterations,
    parse_graph,
    plan_layout,
    run_grover,
    synth_oracle_netlist,
    verify_netlists,
)
from ._core import cost_report_json as _cost_report_json

__all__ = [
    "Graph",
    "ResourceError",
    "ValidationError",
    "cost_report",
    "count_solutions",
    "decompose_mct_binary_netlist",
    "decompose_mct_qudit_netlist",
    "decompose_netlist",
    "marked_states",
    "normalize_netlist",
    "optimal_iterations",
    "parse_graph",
    "plan_layout",
    "run_grover",
    "synth_oracle_netlist",
    "verify_netlists",
]


def cost_report(graph, k, d, compare_baselines=False):
    """Resource report for an instance as a plain dict."""
    return _json.loads(_cost_report_json(graph, k, d, compare_baselines))
