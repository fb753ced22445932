"""Exact rationals and real numbers with explicit absolute error bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from mpmath import mpf, workprec

__all__ = [
    "ApproxReal",
    "DensityResult",
    "ExactRational",
    "PRECISION_BITS",
    "format_fraction",
]

ExactRational = Fraction

PRECISION_BITS = 128
# relative rounding slack charged per mpmath operation at PRECISION_BITS
_ULP = mpf(2) ** -(PRECISION_BITS - 8)

Scalar = Union[int, Fraction]


def format_fraction(x: Fraction) -> str:
    """'num/den' with den > 0, always including the slash."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _to_mpf(x: Scalar) -> mpf:
    x = Fraction(x)
    with workprec(PRECISION_BITS):
        return mpf(x.numerator) / x.denominator


def _float_upper(x: mpf) -> float:
    """A float >= x (for reporting bounds without shrinking them)."""
    f = float(x)
    return f if f >= x else math.nextafter(f, math.inf)


@dataclass(frozen=True)
class ApproxReal:
    """A real number known to lie within abs_error of value."""

    value: mpf
    abs_error: mpf

    @classmethod
    def exact(cls, x: Scalar) -> ApproxReal:
        v = _to_mpf(x)
        return cls(v, abs(v) * _ULP)

    @classmethod
    def from_float(cls, value: float, abs_error: float) -> ApproxReal:
        with workprec(PRECISION_BITS):
            return cls(mpf(value), mpf(abs_error))

    def __add__(self, other: Union[ApproxReal, Scalar]) -> ApproxReal:
        if not isinstance(other, ApproxReal):
            other = ApproxReal.exact(other)
        with workprec(PRECISION_BITS):
            v = self.value + other.value
            return ApproxReal(v, self.abs_error + other.abs_error + abs(v) * _ULP)

    __radd__ = __add__

    def __neg__(self) -> ApproxReal:
        return ApproxReal(-self.value, self.abs_error)

    def __sub__(self, other: Union[ApproxReal, Scalar]) -> ApproxReal:
        if not isinstance(other, ApproxReal):
            other = ApproxReal.exact(other)
        return self + (-other)

    def __mul__(self, other: Union[ApproxReal, Scalar]) -> ApproxReal:
        if not isinstance(other, ApproxReal):
            other = ApproxReal.exact(other)
        with workprec(PRECISION_BITS):
            v = self.value * other.value
            err = (
                abs(self.value) * other.abs_error
                + abs(other.value) * self.abs_error
                + self.abs_error * other.abs_error
                + abs(v) * _ULP
            )
            return ApproxReal(v, err)

    __rmul__ = __mul__

    def widen(self, extra: Union[mpf, float, Scalar]) -> ApproxReal:
        """Same value with extra added to the error bound."""
        with workprec(PRECISION_BITS):
            if isinstance(extra, (int, Fraction)):
                extra = _to_mpf(extra)
            return ApproxReal(self.value, self.abs_error + abs(mpf(extra)))

    @property
    def lower(self) -> mpf:
        with workprec(PRECISION_BITS):
            return self.value - self.abs_error

    @property
    def upper(self) -> mpf:
        with workprec(PRECISION_BITS):
            return self.value + self.abs_error

    def contains(self, x: Union[float, Scalar, mpf]) -> bool:
        if isinstance(x, (int, Fraction)):
            x = _to_mpf(x)
        with workprec(PRECISION_BITS):
            return abs(self.value - mpf(x)) <= self.abs_error

    def agrees_with(self, other: ApproxReal) -> bool:
        """True when the two error intervals overlap."""
        with workprec(PRECISION_BITS):
            return abs(self.value - other.value) <= self.abs_error + other.abs_error

    def __float__(self) -> float:
        return float(self.value)

    def to_dict(self) -> dict:
        return {"decimal": float(self.value), "abs_error": _float_upper(self.abs_error)}

    def __str__(self) -> str:
        return f"{float(self.value):.12f} ± {_float_upper(self.abs_error):.2e}"


@dataclass(frozen=True)
class DensityResult:
    """A density value: an exact multiple of a named constant, plus its decimal.

    coefficient multiplies the constant named by `times` ("S" for the
    two-variable product, "A" for Artin's constant, "1" for an exact rational).
    """

    formula_id: str
    decimal: ApproxReal
    coefficient: Optional[Fraction] = None
    times: str = "S"
    components: dict[str, DensityResult] = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        out: dict = {"formula": self.formula_id}
        if self.coefficient is not None:
            out["fraction"] = format_fraction(self.coefficient)
            out["times"] = self.times
        out.update(self.decimal.to_dict())
        if self.components:
            out["components"] = {name: c.to_dict() for name, c in self.components.items()}
        return out
