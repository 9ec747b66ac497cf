"""Suspension homomorphism, Wecken condition and selfcoincidence invariants for S^m -> S^n/G."""

from .analyzer import (
    TRIVIAL,
    Z2,
    AnalysisReport,
    GroupContext,
    MapFacts,
    PairOutcome,
    analyze_pair,
    analyze_self,
)
from .classifier import verdict_cell, wecken
from .ehp import DimPair, KernelDesc, e_injective, e_surjective, h0_range_vanishes, kernel_of_E
from .kervaire import halvability, halvable, strong_kervaire
from .knowledge import KnowledgeBase, default_kb, load_kb, load_table
from .tables import Generator, WhiteheadProduct, stem_entry, whitehead_order, whitehead_vanishes
from .verdict import (
    Citation,
    DomainError,
    ElemOrder,
    InconsistentFactsError,
    PreconditionError,
    Truth,
    UnsupportedRangeError,
    Verdict,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "Citation",
    "DimPair",
    "DomainError",
    "ElemOrder",
    "Generator",
    "GroupContext",
    "InconsistentFactsError",
    "KernelDesc",
    "KnowledgeBase",
    "MapFacts",
    "PairOutcome",
    "PreconditionError",
    "TRIVIAL",
    "Truth",
    "UnsupportedRangeError",
    "Verdict",
    "WhiteheadProduct",
    "Z2",
    "analyze_pair",
    "analyze_self",
    "default_kb",
    "e_injective",
    "e_surjective",
    "h0_range_vanishes",
    "halvability",
    "halvable",
    "kernel_of_E",
    "load_kb",
    "load_table",
    "stem_entry",
    "strong_kervaire",
    "verdict_cell",
    "wecken",
    "whitehead_order",
    "whitehead_vanishes",
]
