"""Second-order recurrences and their root and initial quotients.

A recurrence x_{n+2} = a1*x_{n+1} + a0*x_n has characteristic polynomial
f = T**2 - a1*T - a0 with roots alpha, alpha~. The root quotient is
r = alpha/alpha~ and the initial quotient is
q = (x1 - alpha*x0)/(x1 - alpha~*x0). A prime p divides some term exactly
when q is a power of r modulo p.

The canonical orientation takes alpha = (a1 + sqrt(disc))/2 with the
positive square root; swap=True gives the other labeling, which inverts
both quotients.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .quadratic import AlgebraicNumber, FieldKind, QuadraticContext
from .torsion import is_torsion_pair

logger = logging.getLogger(__name__)

__all__ = [
    "Recurrence",
    "Classification",
    "ClassificationKind",
    "QuotientKind",
    "RecurrenceError",
    "FirstOrderError",
    "InseparableError",
    "DegenerateInitialError",
    "DegenerateRecurrenceError",
    "LAGARIAS",
    "LUCAS",
    "quadratic_context",
    "root_quotient",
    "initial_quotient",
    "classify",
    "term_mod",
]


class RecurrenceError(Exception):
    """Base error for recurrences that cannot be analyzed."""

    pass


class FirstOrderError(RecurrenceError):
    """a0 = 0: the sequence satisfies a first-order recurrence."""

    def __init__(self, a1: int):
        self.a1 = a1
        super().__init__(f"a0 = 0 makes x_(n+1) = {a1}*x_n a first-order recurrence")


class InseparableError(RecurrenceError):
    """The characteristic polynomial has a double root."""

    def __init__(self, a1: int, a0: int):
        self.a1 = a1
        self.a0 = a0
        super().__init__(f"T^2 - ({a1})T - ({a0}) has zero discriminant")


class DegenerateInitialError(RecurrenceError):
    """x1 = alpha*x0 or x1 = alpha~*x0, so the sequence has lower order."""

    pass


class DegenerateRecurrenceError(RecurrenceError):
    """The recurrence classifies outside Torsion/NonTorsion."""

    def __init__(self, classification: Classification):
        self.classification = classification
        super().__init__(
            f"recurrence is degenerate (classification {classification.kind.value})"
        )


@dataclass(frozen=True)
class Recurrence:
    """The four integers a1, a0, x0, x1 defining the sequence."""

    a1: int
    a0: int
    x0: int
    x1: int

    def __post_init__(self) -> None:
        if self.a0 == 0:
            raise FirstOrderError(self.a1)

    @property
    def disc_poly(self) -> int:
        return self.a1 * self.a1 + 4 * self.a0

    def terms(self, count: int) -> list[int]:
        """The first count terms x_0, ..., x_(count-1), exactly."""
        out: list[int] = []
        x, y = self.x0, self.x1
        for _ in range(count):
            out.append(x)
            x, y = y, self.a1 * y + self.a0 * x
        return out

    def term(self, n: int) -> int:
        x, y = self.x0, self.x1
        for _ in range(n):
            x, y = y, self.a1 * y + self.a0 * x
        return x

    def scaled(self, k: int) -> Recurrence:
        """Same recurrence with initial terms multiplied by k."""
        return Recurrence(self.a1, self.a0, k * self.x0, k * self.x1)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a1, self.a0, self.x0, self.x1)

    def __str__(self) -> str:
        return f"({self.a1}, {self.a0}, {self.x0}, {self.x1})"


LAGARIAS = Recurrence(1, 1, 3, 1)
LUCAS = Recurrence(1, 1, 2, 1)


class ClassificationKind(str, Enum):
    FIRST_ORDER_REJECT = "FirstOrderReject"
    INSEPARABLE = "Inseparable"
    DEGENERATE_ROOT_OF_UNITY = "DegenerateRootOfUnity"
    DEGENERATE_INITIAL = "DegenerateInitial"
    TORSION = "Torsion"
    NON_TORSION = "NonTorsion"


class QuotientKind(str, Enum):
    RATIONAL = "Rational"
    QUADRATIC = "Quadratic"
    UNDEFINED = "Undefined"


@dataclass(frozen=True)
class Classification:
    """Outcome of classify, with the exact quotients when they exist."""

    kind: ClassificationKind
    quotient_kind: QuotientKind
    q: Optional[AlgebraicNumber] = None
    r: Optional[AlgebraicNumber] = None

    @property
    def is_degenerate(self) -> bool:
        return self.kind not in (ClassificationKind.TORSION, ClassificationKind.NON_TORSION)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "quotient_kind": self.quotient_kind.value,
            "q": None if self.q is None else str(self.q),
            "r": None if self.r is None else str(self.r),
        }


def quadratic_context(rec: Recurrence) -> QuadraticContext:
    """Splitting data of the characteristic polynomial.

    Raises:
        InseparableError: If the discriminant is zero
    """
    if rec.disc_poly == 0:
        raise InseparableError(rec.a1, rec.a0)
    return QuadraticContext.from_coefficients(rec.a1, rec.a0)


def root_quotient(rec: Recurrence, swap: bool = False) -> AlgebraicNumber:
    """r = alpha/alpha~ (or its inverse when swap is set); norm 1 in the quadratic kind."""
    ctx = quadratic_context(rec)
    return ctx.alpha(swap) / ctx.alpha(not swap)


def initial_quotient(rec: Recurrence, swap: bool = False) -> AlgebraicNumber:
    """q = (x1 - alpha*x0)/(x1 - alpha~*x0) in the same orientation as root_quotient.

    Raises:
        InseparableError: If the discriminant is zero
        DegenerateInitialError: If numerator or denominator vanishes
    """
    ctx = quadratic_context(rec)
    numerator = rec.x1 - ctx.alpha(swap) * rec.x0
    denominator = rec.x1 - ctx.alpha(not swap) * rec.x0
    if numerator.is_zero() or denominator.is_zero():
        raise DegenerateInitialError(
            f"initial terms ({rec.x0}, {rec.x1}) lie on an eigenvector of {rec}"
        )
    return numerator / denominator


def classify(
    rec: Union[Recurrence, tuple[int, int, int, int]],
) -> Classification:
    """Classify a recurrence; never raises for well-typed input.

    Accepts raw coefficients so that a0 = 0 can be reported rather than rejected.
    """
    if not isinstance(rec, Recurrence):
        try:
            rec = Recurrence(*rec)
        except FirstOrderError:
            return Classification(ClassificationKind.FIRST_ORDER_REJECT, QuotientKind.UNDEFINED)

    if rec.disc_poly == 0:
        return Classification(ClassificationKind.INSEPARABLE, QuotientKind.UNDEFINED)

    ctx = quadratic_context(rec)
    quotient_kind = (
        QuotientKind.RATIONAL if ctx.field_kind is FieldKind.RATIONAL else QuotientKind.QUADRATIC
    )
    r = root_quotient(rec)
    try:
        q: Optional[AlgebraicNumber] = initial_quotient(rec)
    except DegenerateInitialError:
        q = None

    if r.is_root_of_unity():
        return Classification(ClassificationKind.DEGENERATE_ROOT_OF_UNITY, quotient_kind, q, r)
    if q is None:
        return Classification(
            ClassificationKind.DEGENERATE_INITIAL, QuotientKind.UNDEFINED, None, r
        )

    torsion = is_torsion_pair(q, r)
    logger.debug(f"classify {rec}: q={q}, r={r}, torsion={torsion}")
    kind = ClassificationKind.TORSION if torsion else ClassificationKind.NON_TORSION
    return Classification(kind, quotient_kind, q, r)


def term_mod(rec: Recurrence, n: int, m: int) -> int:
    """x_n mod m by linear iteration.

    Raises:
        ValueError: If m < 2 or n < 0
    """
    if m < 2 or n < 0:
        raise ValueError(f"need m >= 2 and n >= 0, got m={m}, n={n}")
    a1, a0 = rec.a1 % m, rec.a0 % m
    x, y = rec.x0 % m, rec.x1 % m
    for _ in range(n):
        x, y = y, (a1 * y + a0 * x) % m
    return x
