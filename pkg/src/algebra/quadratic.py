"""Exact arithmetic in Q and in quadratic fields Q(sqrt(D)).

Elements are stored as u + v*omega with rational u, v, where omega is sqrt(D)
or (1 + sqrt(D))/2 depending on D mod 4, so that integral elements have
integer coordinates. omega satisfies omega**2 = t*omega + n0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Union

from sympy import factorint
from sympy.ntheory import is_quad_residue

__all__ = [
    "AlgebraicNumber",
    "BasisMode",
    "FieldKind",
    "QuadraticContext",
    "QuadraticField",
    "RationalLike",
    "Splitting",
    "squarefree_decomposition",
    "MAX_ROOT_OF_UNITY_ORDER",
]

RationalLike = Union[int, Fraction]

# Quadratic fields contain only roots of unity of order dividing 4 or 6.
MAX_ROOT_OF_UNITY_ORDER = 12


class FieldKind(str, Enum):
    RATIONAL = "Rational"
    QUADRATIC = "Quadratic"


class BasisMode(str, Enum):
    SQRT = "SqrtBasis"
    HALF_INTEGER = "HalfIntegerBasis"


class Splitting(str, Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Split a nonzero integer as n = s**2 * D with D squarefree.

    Args:
        n: Nonzero integer

    Returns:
        (D, s) with s > 0; D carries the sign of n
    """
    if n == 0:
        raise ValueError("zero has no squarefree part")
    core, cofactor = (-1 if n < 0 else 1), 1
    for p, e in factorint(abs(n)).items():
        cofactor *= p ** (e // 2)
        if e % 2:
            core *= p
    return core, cofactor


@dataclass(frozen=True)
class QuadraticField:
    """Q(sqrt(D)) for squarefree D; D = 1 stands for Q itself."""

    D: int

    @property
    def kind(self) -> FieldKind:
        return FieldKind.RATIONAL if self.D == 1 else FieldKind.QUADRATIC

    @property
    def basis_mode(self) -> BasisMode:
        if self.D != 1 and self.D % 4 == 1:
            return BasisMode.HALF_INTEGER
        return BasisMode.SQRT

    @property
    def t(self) -> int:
        """Trace of omega."""
        return 1 if self.basis_mode is BasisMode.HALF_INTEGER else 0

    @property
    def n0(self) -> int:
        """omega**2 - t*omega, i.e. minus the norm of omega."""
        if self.basis_mode is BasisMode.HALF_INTEGER:
            return (self.D - 1) // 4
        return self.D

    @property
    def discriminant(self) -> int:
        """Field discriminant: D or 4D, and 1 for Q."""
        if self.kind is FieldKind.RATIONAL:
            return 1
        return self.D if self.basis_mode is BasisMode.HALF_INTEGER else 4 * self.D

    def splitting(self, p: int) -> Splitting:
        """How the prime p factors in the ring of integers. Every p splits in Q."""
        d = self.discriminant
        if d % p == 0:
            return Splitting.RAMIFIED
        if p == 2:
            return Splitting.SPLIT if d % 8 == 1 else Splitting.INERT
        return Splitting.SPLIT if is_quad_residue(d % p, p) else Splitting.INERT

    def element(self, u: RationalLike, v: RationalLike = 0) -> AlgebraicNumber:
        return AlgebraicNumber(Fraction(u), Fraction(v), self)

    def from_sqrt(self, a: RationalLike, b: RationalLike = 0) -> AlgebraicNumber:
        """The element a + b*sqrt(D)."""
        if self.kind is FieldKind.RATIONAL:
            return self.element(Fraction(a) + Fraction(b))
        if self.basis_mode is BasisMode.HALF_INTEGER:
            # sqrt(D) = 2*omega - 1
            return self.element(Fraction(a) - Fraction(b), 2 * Fraction(b))
        return self.element(a, b)

    def one(self) -> AlgebraicNumber:
        return self.element(1)


@dataclass(frozen=True, eq=False)
class AlgebraicNumber:
    """Immutable element u + v*omega of a QuadraticField."""

    u: Fraction
    v: Fraction
    field: QuadraticField

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))
        if self.field.kind is FieldKind.RATIONAL and self.v != 0:
            raise ValueError("rational field elements have no omega component")

    def _coerce(self, other: object) -> AlgebraicNumber:
        if isinstance(other, AlgebraicNumber):
            if other.field != self.field:
                raise ValueError(f"field mismatch: D={self.field.D} vs D={other.field.D}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        return NotImplemented

    def __add__(self, other: object) -> AlgebraicNumber:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgebraicNumber(self.u + o.u, self.v + o.v, self.field)

    __radd__ = __add__

    def __neg__(self) -> AlgebraicNumber:
        return AlgebraicNumber(-self.u, -self.v, self.field)

    def __sub__(self, other: object) -> AlgebraicNumber:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgebraicNumber(self.u - o.u, self.v - o.v, self.field)

    def __rsub__(self, other: object) -> AlgebraicNumber:
        return -self + other

    def __mul__(self, other: object) -> AlgebraicNumber:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        t, n0 = self.field.t, self.field.n0
        vv = self.v * o.v
        return AlgebraicNumber(
            self.u * o.u + n0 * vv,
            self.u * o.v + o.u * self.v + t * vv,
            self.field,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> AlgebraicNumber:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> AlgebraicNumber:
        return self.inverse() * other

    def __pow__(self, exponent: int) -> AlgebraicNumber:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = self.field.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.v == 0 and self.u == other
        if isinstance(other, AlgebraicNumber):
            return (self.u, self.v, self.field) == (other.u, other.v, other.field)
        return NotImplemented

    def __hash__(self) -> int:
        if self.v == 0:
            return hash(self.u)
        return hash((self.u, self.v, self.field.D))

    def conjugate(self) -> AlgebraicNumber:
        """Image under sqrt(D) -> -sqrt(D); conj(omega) = t - omega."""
        return AlgebraicNumber(self.u + self.field.t * self.v, -self.v, self.field)

    def norm(self) -> Fraction:
        return self.u * self.u + self.field.t * self.u * self.v - self.field.n0 * self.v * self.v

    def trace(self) -> Fraction:
        return 2 * self.u + self.field.t * self.v

    def inverse(self) -> AlgebraicNumber:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("element of norm zero has no inverse")
        c = self.conjugate()
        return AlgebraicNumber(c.u / n, c.v / n, self.field)

    @property
    def is_rational(self) -> bool:
        return self.v == 0

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    @property
    def denominator(self) -> int:
        """Least m > 0 with m * self integral in the omega basis."""
        return math.lcm(self.u.denominator, self.v.denominator)

    def sqrt_coordinates(self) -> tuple[Fraction, Fraction]:
        """(a, b) with self = a + b*sqrt(D)."""
        if self.field.basis_mode is BasisMode.HALF_INTEGER:
            return self.u + self.v / 2, self.v / 2
        return self.u, self.v

    def is_root_of_unity(self) -> bool:
        if self.v == 0:
            return self.u in (1, -1)
        if self.norm() != 1:
            return False
        return any(self**k == 1 for k in range(1, MAX_ROOT_OF_UNITY_ORDER + 1))

    def __repr__(self) -> str:
        return f"AlgebraicNumber({self.u}, {self.v}, D={self.field.D})"

    def __str__(self) -> str:
        a, b = self.sqrt_coordinates()
        if b == 0:
            return str(a)
        sign = "-" if b < 0 else "+"
        return f"{a} {sign} {abs(b)}*sqrt({self.field.D})"


@dataclass(frozen=True)
class QuadraticContext:
    """Splitting data of f = T**2 - a1*T - a0 with nonzero discriminant."""

    a1: int
    a0: int
    disc_poly: int
    D: int
    sqrt_cofactor: int

    @classmethod
    def from_coefficients(cls, a1: int, a0: int) -> QuadraticContext:
        disc = a1 * a1 + 4 * a0
        if disc == 0:
            raise ValueError("characteristic polynomial has a double root")
        core, cofactor = squarefree_decomposition(disc)
        return cls(a1=a1, a0=a0, disc_poly=disc, D=core, sqrt_cofactor=cofactor)

    @cached_property
    def field(self) -> QuadraticField:
        return QuadraticField(self.D)

    @property
    def field_kind(self) -> FieldKind:
        return self.field.kind

    @property
    def basis_mode(self) -> BasisMode:
        return self.field.basis_mode

    def alpha(self, swap: bool = False) -> AlgebraicNumber:
        """Root (a1 + sqrt(disc))/2 of f, or its conjugate root when swap is set."""
        s = -self.sqrt_cofactor if swap else self.sqrt_cofactor
        return self.field.from_sqrt(Fraction(self.a1, 2), Fraction(s, 2))

    def alpha_coordinates(self, x: AlgebraicNumber) -> tuple[Fraction, Fraction]:
        """(c, d) with x = c + d*alpha for the canonical root alpha."""
        if self.field_kind is FieldKind.RATIONAL:
            return x.u, Fraction(0)
        alpha = self.alpha()
        # omega = (alpha - alpha.u) / alpha.v
        d = x.v / alpha.v
        return x.u - d * alpha.u, d
