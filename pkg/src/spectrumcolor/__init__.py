"""Spectrum graph coloring: interference-aware coloring with exact
rational arithmetic, theoretical bounds, heuristics, and a brute-force
oracle.
"""

from .bounds import (
    BoundReport,
    csc_bound,
    csc_precondition,
    csc_report,
    generalized_gcd,
    inf_norm,
    tsc_bound,
    tsc_report,
)
from .core import (
    Graph,
    InstanceTooLargeError,
    InvalidParameterError,
    InvalidStateError,
    SolveReport,
    Spectrum,
    SpectrumColoringError,
    UndefinedGcdError,
    interference_profile,
    make_exp_decay_spectrum,
    max_interference,
    potential_interference,
    sum_edge_interference,
    vertex_interference,
)
from .graphs import gen_er_graph, named_graph
from .harmony import HarmonyParams, harmony_csc, harmony_tsc
from .oracle import OracleResult, exact_csc, exact_tsc
from .solvers import (
    balanced_coloring,
    csc_dsatur,
    iterative_csc,
    random_coloring,
    tsc_dsatur,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "Graph",
    "HarmonyParams",
    "InstanceTooLargeError",
    "InvalidParameterError",
    "InvalidStateError",
    "OracleResult",
    "SolveReport",
    "Spectrum",
    "SpectrumColoringError",
    "UndefinedGcdError",
    "balanced_coloring",
    "csc_bound",
    "csc_dsatur",
    "csc_precondition",
    "csc_report",
    "exact_csc",
    "exact_tsc",
    "gen_er_graph",
    "generalized_gcd",
    "harmony_csc",
    "harmony_tsc",
    "inf_norm",
    "interference_profile",
    "iterative_csc",
    "make_exp_decay_spectrum",
    "max_interference",
    "named_graph",
    "potential_interference",
    "random_coloring",
    "sum_edge_interference",
    "tsc_bound",
    "tsc_dsatur",
    "tsc_report",
    "vertex_interference",
]
