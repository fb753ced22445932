"""Residues of algebraic numbers modulo a prime.

Split primes reduce into F_p through the canonical root of f mod p. Inert
primes reduce into F_p[T]/(f), a field with p**2 elements, stored as
coefficient pairs (c0, c1) meaning c0 + c1*T with T**2 = a1*T + a0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

__all__ = ["PrimeCase", "ResidueRep", "inert_mul", "inert_pow"]


class PrimeCase(str, Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"
    BAD = "bad"

    @property
    def is_good(self) -> bool:
        return self in (PrimeCase.SPLIT, PrimeCase.INERT)


Pair = tuple[int, int]


def inert_mul(x: Pair, y: Pair, a1: int, a0: int, p: int) -> Pair:
    """Product in F_p[T]/(T**2 - a1*T - a0)."""
    c1d1 = x[1] * y[1]
    return (
        (x[0] * y[0] + a0 * c1d1) % p,
        (x[0] * y[1] + x[1] * y[0] + a1 * c1d1) % p,
    )


def inert_pow(x: Pair, e: int, a1: int, a0: int, p: int) -> Pair:
    """x**e in F_p[T]/(T**2 - a1*T - a0) for e >= 0."""
    result: Pair = (1, 0)
    while e:
        if e & 1:
            result = inert_mul(result, x, a1, a0, p)
        x = inert_mul(x, x, a1, a0, p)
        e >>= 1
    return result


@dataclass(frozen=True)
class ResidueRep:
    """Image of an algebraic number modulo p.

    value is an int in F_p for split primes and a pair (c0, c1) for inert
    primes; modulus holds (a1 mod p, a0 mod p) for the inert multiplication.
    """

    case: PrimeCase
    p: int
    value: Union[int, Pair]
    modulus: Pair = (0, 0)

    def __post_init__(self) -> None:
        if self.case not in (PrimeCase.SPLIT, PrimeCase.INERT):
            raise ValueError(f"no residue representation for {self.case.value} primes")

    def __mul__(self, other: ResidueRep) -> ResidueRep:
        if self.case is PrimeCase.SPLIT:
            return ResidueRep(self.case, self.p, (self.value * other.value) % self.p)
        a1, a0 = self.modulus
        return ResidueRep(
            self.case, self.p, inert_mul(self.value, other.value, a1, a0, self.p), self.modulus
        )

    def __pow__(self, exponent: int) -> ResidueRep:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self.case is PrimeCase.SPLIT:
            return ResidueRep(self.case, self.p, pow(self.value, exponent, self.p))
        a1, a0 = self.modulus
        return ResidueRep(
            self.case, self.p, inert_pow(self.value, exponent, a1, a0, self.p), self.modulus
        )

    def norm(self) -> int:
        """x * x**p in F_p; for split residues the value itself."""
        if self.case is PrimeCase.SPLIT:
            return self.value
        c0, c1 = self.value
        a1, a0 = self.modulus
        return (c0 * c0 + a1 * c0 * c1 - a0 * c1 * c1) % self.p

    def inverse(self) -> ResidueRep:
        if self.case is PrimeCase.SPLIT:
            return ResidueRep(self.case, self.p, pow(self.value, -1, self.p))
        # conj(c0 + c1*T) = (c0 + a1*c1) - c1*T
        c0, c1 = self.value
        a1, _ = self.modulus
        n_inv = pow(self.norm(), -1, self.p)
        return ResidueRep(
            self.case,
            self.p,
            ((c0 + a1 * c1) * n_inv % self.p, (-c1) * n_inv % self.p),
            self.modulus,
        )

    def is_one(self) -> bool:
        if self.case is PrimeCase.SPLIT:
            return self.value == 1
        return self.value == (1, 0)

    @property
    def group_order(self) -> int:
        """Order of the cyclic group the residue lives in: p - 1 or p + 1."""
        return self.p - 1 if self.case is PrimeCase.SPLIT else self.p + 1
