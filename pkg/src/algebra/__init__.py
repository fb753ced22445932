"""Recurrences, quadratic-field arithmetic and the torsion classification."""

from .quadratic import (
    AlgebraicNumber,
    BasisMode,
    FieldKind,
    QuadraticContext,
    QuadraticField,
    Splitting,
    squarefree_decomposition,
)
from .recurrence import (
    LAGARIAS,
    LUCAS,
    Classification,
    ClassificationKind,
    DegenerateInitialError,
    DegenerateRecurrenceError,
    FirstOrderError,
    InseparableError,
    QuotientKind,
    Recurrence,
    RecurrenceError,
    classify,
    initial_quotient,
    quadratic_context,
    root_quotient,
    term_mod,
)
from .torsion import ideal_valuations, is_torsion_pair

__all__ = [
    "AlgebraicNumber",
    "BasisMode",
    "FieldKind",
    "QuadraticContext",
    "QuadraticField",
    "Splitting",
    "squarefree_decomposition",
    "LAGARIAS",
    "LUCAS",
    "Classification",
    "ClassificationKind",
    "DegenerateInitialError",
    "DegenerateRecurrenceError",
    "FirstOrderError",
    "InseparableError",
    "QuotientKind",
    "Recurrence",
    "RecurrenceError",
    "classify",
    "initial_quotient",
    "quadratic_context",
    "root_quotient",
    "term_mod",
    "ideal_valuations",
    "is_torsion_pair",
]
