"""Configuration reducibility via the board game.

A configuration is a small pattern graph with known host degrees and an
ordered boundary of precolored half-edges ("slots").  A board records
which color each slot sees.  The prover searches for a strategy that
3-colors the pattern for every board, using Kempe swaps at slots against
an adversary who controls how chains pair the slots up; a winning
strategy is emitted as a replayable certificate and checked by an
independent verifier.
"""

from __future__ import annotations

from .boards import Board, canonicalize, enumerate_boards
from .configs import (
    Configuration,
    config_hash,
    emit_configuration,
    identify,
    list_patterns,
    load_pattern,
    parse_configuration,
)
from .game import (
    StrategyCertificate,
    VacuousMoveError,
    adversary_responses,
    directly_colorable,
    losing_boards,
    prove_reducible,
)
from .verify import VerificationResult, verify_certificate

__all__ = [
    "Board",
    "Configuration",
    "StrategyCertificate",
    "VacuousMoveError",
    "VerificationResult",
    "adversary_responses",
    "canonicalize",
    "config_hash",
    "directly_colorable",
    "emit_configuration",
    "enumerate_boards",
    "identify",
    "list_patterns",
    "load_pattern",
    "losing_boards",
    "parse_configuration",
    "prove_reducible",
    "verify_certificate",
]
