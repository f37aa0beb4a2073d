"""Safe paths in flow decompositions of DAGs: verification and enumeration."""

from .decomposition import FlowDecomposition, WeightedPath, decompose
from .funnel import Funnel, SolutionTriplet, build_funnels, enumerate_funnel, expand_solution, report_maximal
from .graph import (
    ConservationError,
    CycleError,
    FlowDAG,
    FlowError,
    InvalidPath,
    NonPositiveWeightError,
    ParseError,
    build,
    dumps,
    parse,
    read,
    topological_order,
)
from .safety import excess_flow, is_safe, is_w_safe, verify
from .simple import CompactPath, ConciseRepresentation, enumerate_simple, maximal_safe_in_path

__all__ = [
    "CompactPath", "ConciseRepresentation", "ConservationError", "CycleError", "FlowDAG",
    "FlowDecomposition", "FlowError", "Funnel", "InvalidPath", "NonPositiveWeightError",
    "ParseError", "SolutionTriplet", "WeightedPath", "build", "build_funnels", "decompose",
    "dumps", "enumerate_funnel", "enumerate_simple", "excess_flow", "expand_solution",
    "is_safe", "is_w_safe", "maximal_safe_in_path", "parse", "read", "report_maximal",
    "topological_order", "verify",
]
