"""Per-prime reductions, multiplicative orders and the divisibility decision."""

from .engine import (
    ContractViolation,
    Method,
    NotInvertibleError,
    OddOrderCheck,
    PrimeVerdict,
    ResidueEngine,
    ResidueError,
    bad_primes,
    canonical_root,
    check_43,
    check_44,
    divides_sequence,
    element_order,
    ell_part_inclusion,
    engine_for,
    period_length,
    period_oracle,
    prime_case,
    rank_of_apparition,
    reduce,
)
from .field import PrimeCase, ResidueRep

__all__ = [
    "ContractViolation",
    "Method",
    "NotInvertibleError",
    "OddOrderCheck",
    "PrimeVerdict",
    "ResidueEngine",
    "ResidueError",
    "bad_primes",
    "canonical_root",
    "check_43",
    "check_44",
    "divides_sequence",
    "element_order",
    "ell_part_inclusion",
    "engine_for",
    "period_length",
    "period_oracle",
    "prime_case",
    "rank_of_apparition",
    "reduce",
    "PrimeCase",
    "ResidueRep",
]
