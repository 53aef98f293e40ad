"""Exact belief-function calculus with forensic identification solvers.

Public surface: the core calculus (frames, events, mass functions,
conditioning), product frames with predicates, closed-form solvers for
the island and paternity identification problems, guilt/evidence
ledgers, and the brute-force verification oracle behind them all.
"""

from .core import EventSet, Frame, MassFunction
from .errors import (
    BackendMismatch,
    BeliefError,
    ConditioningImpossible,
    DuplicateVariableName,
    EmptyFocalSet,
    FrameMismatch,
    FrameTooLarge,
    InvalidParams,
    MassNotNormalized,
    NegativeMass,
    ParseError,
    UnknownValue,
    UnknownVariable,
    ValidationError,
    VerificationFailed,
)
from .frames import (
    And,
    Equals,
    In,
    IndirectEquals,
    ProductFrame,
    Variable,
    binary,
    build_product_frame,
)
from .island import (
    GeneralizedParams,
    IslandParams,
    cold_case_belief,
    cold_case_classical,
    cold_case_posterior_mass,
    generalized_cold_case_belief,
    search_case_belief,
    search_case_belief_harmonic,
    search_case_classical,
)
from .ledger import (
    CANONICAL_OPTIONS,
    GuiltPosterior,
    Ledger,
    cold_case_ledger,
    guilt_evidence_frame,
    ledger_to_mass,
    posterior_guilt,
)
from .parental import (
    ParentalParams,
    paternity_belief_one_allele,
    paternity_belief_two_alleles,
    paternity_classical,
)

__version__ = "0.1.0"

__all__ = [
    "And",
    "BackendMismatch",
    "BeliefError",
    "CANONICAL_OPTIONS",
    "ConditioningImpossible",
    "DuplicateVariableName",
    "EmptyFocalSet",
    "Equals",
    "EventSet",
    "Frame",
    "FrameMismatch",
    "FrameTooLarge",
    "GeneralizedParams",
    "GuiltPosterior",
    "In",
    "IndirectEquals",
    "InvalidParams",
    "IslandParams",
    "Ledger",
    "MassFunction",
    "MassNotNormalized",
    "NegativeMass",
    "ParentalParams",
    "ParseError",
    "ProductFrame",
    "UnknownValue",
    "UnknownVariable",
    "ValidationError",
    "Variable",
    "VerificationFailed",
    "binary",
    "build_product_frame",
    "cold_case_belief",
    "cold_case_classical",
    "cold_case_ledger",
    "cold_case_posterior_mass",
    "generalized_cold_case_belief",
    "guilt_evidence_frame",
    "ledger_to_mass",
    "paternity_belief_one_allele",
    "paternity_belief_two_alleles",
    "paternity_classical",
    "posterior_guilt",
    "search_case_belief",
    "search_case_belief_harmonic",
    "search_case_classical",
]
