"""Constrained DNA storage codes.

Secondary-structure avoidance (via TC-dominance), homopolymer run-length
limits and GC balance (global, partition, local), with single-substitution
and single-edit correction, plus brute-force oracles that check them.
"""

__version__ = "0.1.0"

from .alphabet import (  # noqa: E402
    dna_to_z4, gc_weight, reverse_complement, tau_decode, tau_encode, z4_to_dna,
)
from .errors import DecodingError, DnaCodeError, ValidationError  # noqa: E402
from .oracles import Global, Local, Partition, is_balanced, is_dominant, is_m_ssa, max_run_length  # noqa: E402

__all__ = [
    "dna_to_z4", "gc_weight", "reverse_complement", "tau_decode", "tau_encode", "z4_to_dna",
    "DecodingError", "DnaCodeError", "ValidationError",
    "Global", "Local", "Partition", "is_balanced", "is_dominant", "is_m_ssa", "max_run_length",
]
