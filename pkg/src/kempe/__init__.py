"""Toolkit for edge colorings of subcubic graphs.

Exact chromatic-index computation, Kempe-chain surgery, a game-based
reducibility prover for boundary configurations, a discharging auditor,
and generators for the graph families the tools are usually run on.

The most commonly used names are re-exported here; the submodules hold
the rest (`kempe.fixability` for the reducibility game, `kempe.cli` for
the command-line front end, `kempe.bench` for the kernel benchmark).
"""

from __future__ import annotations

from ._kernel import BACKEND
from .audit import (
    HDecomposition,
    RichVertexType,
    Violation,
    audit_basic,
    classify_rich,
    decompose_h,
    find_pattern,
)
from .chains import KempeChain, chain_at, linked, swap, swap_at
from .coloring import (
    ChiResult,
    CriticalityReport,
    chromatic_index,
    colorable_with_3,
    is_3_critical,
    oracle_chromatic_index,
)
from .discharge import (
    Charge,
    DischargeTrace,
    audit_bound,
    run_discharge,
    solve_parameters,
)
from .families import (
    enumerate_subcubic,
    hajos_join,
    petersen,
    petersen_star,
    woodall_j,
)
from .fixability import (
    Configuration,
    StrategyCertificate,
    enumerate_boards,
    identify,
    list_patterns,
    load_pattern,
    parse_configuration,
    prove_reducible,
    verify_certificate,
)
from .graphs import (
    COLOR_LETTERS,
    UNCOLORED,
    Graph,
    GraphError,
    ParseError,
    SizeError,
    ValidationError,
    emit_graph,
    parse_graph,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "COLOR_LETTERS",
    "Charge",
    "ChiResult",
    "Configuration",
    "CriticalityReport",
    "DischargeTrace",
    "Graph",
    "GraphError",
    "HDecomposition",
    "KempeChain",
    "ParseError",
    "RichVertexType",
    "SizeError",
    "StrategyCertificate",
    "UNCOLORED",
    "ValidationError",
    "Violation",
    "audit_basic",
    "audit_bound",
    "chain_at",
    "chromatic_index",
    "classify_rich",
    "colorable_with_3",
    "decompose_h",
    "emit_graph",
    "enumerate_boards",
    "enumerate_subcubic",
    "find_pattern",
    "hajos_join",
    "identify",
    "is_3_critical",
    "linked",
    "list_patterns",
    "load_pattern",
    "oracle_chromatic_index",
    "parse_configuration",
    "parse_graph",
    "petersen",
    "petersen_star",
    "prove_reducible",
    "run_discharge",
    "solve_parameters",
    "swap",
    "swap_at",
    "verify_certificate",
    "woodall_j",
    "__version__",
]
