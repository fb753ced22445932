"""Per-prime analysis of a recurrence.

For a good prime p, p divides some term iff q mod p lies in the cyclic
subgroup generated by r mod p. The ambient group is cyclic (F_p* for split
primes, the norm-one kernel of order p + 1 for inert primes), so membership
reduces to ord(q) | ord(r). Ramified and bad primes are decided by walking
the sequence mod p.

Usage:
    engine = ResidueEngine(LAGARIAS)
    verdict = engine.decide(19)
    verdict.divides, verdict.ord_r, verdict.ord_q
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional

from sympy.ntheory import is_quad_residue, sqrt_mod

from ..algebra import (
    AlgebraicNumber,
    DegenerateRecurrenceError,
    FieldKind,
    QuadraticContext,
    Recurrence,
    Splitting,
    classify,
    initial_quotient,
    quadratic_context,
    root_quotient,
)
from ..arith.factorization import Factorization, FactorizationCache, factorize
from .field import PrimeCase, ResidueRep

logger = logging.getLogger(__name__)

__all__ = [
    "Method",
    "OddOrderCheck",
    "PrimeVerdict",
    "ResidueEngine",
    "ResidueError",
    "NotInvertibleError",
    "ContractViolation",
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
]


class ResidueError(Exception):
    """Base error for per-prime computations."""

    pass


class NotInvertibleError(ResidueError):
    """An element does not reduce to a unit modulo p."""

    def __init__(self, p: int, what: str = "element"):
        self.p = p
        super().__init__(f"{what} is not invertible modulo {p}")


class ContractViolation(ResidueError):
    """A precondition of a per-prime computation does not hold."""

    pass


class Method(str, Enum):
    ORDERS = "orders"
    ORACLE = "oracle"


@dataclass(frozen=True)
class PrimeVerdict:
    """Whether p divides some term, and how that was decided."""

    p: int
    case: PrimeCase
    divides: bool
    ord_r: Optional[int]
    ord_q: Optional[int]
    method: Method


class OddOrderCheck(NamedTuple):
    odd_order: bool
    qr_minus11: bool


# Coordinates c + d*alpha stored as integer (numerator, denominator) pairs.
_Coords = tuple[int, int, int, int]


def _alpha_coords(ctx: QuadraticContext, x: AlgebraicNumber) -> _Coords:
    c, d = ctx.alpha_coordinates(x)
    return (c.numerator, c.denominator, d.numerator, d.denominator)


def _fraction_mod(num: int, den: int, p: int) -> int:
    if den % p == 0:
        raise NotInvertibleError(p, "denominator")
    return num * pow(den, -1, p) % p


def canonical_root(a1: int, a0: int, p: int) -> int:
    """Smallest nonnegative root of T**2 - a1*T - a0 mod p.

    Raises:
        ContractViolation: If f has no root mod p
    """
    if p == 2:
        roots = [x for x in range(2) if (x * x - a1 * x - a0) % 2 == 0]
    else:
        disc = (a1 * a1 + 4 * a0) % p
        inv2 = pow(2, -1, p)
        roots = [(a1 + s) * inv2 % p for s in sqrt_mod(disc, p, all_roots=True) or []]
    if not roots:
        raise ContractViolation(f"T^2 - {a1}T - {a0} has no root modulo {p}")
    return min(roots)


def prime_case(p: int, ctx: QuadraticContext, bad_set: frozenset[int]) -> PrimeCase:
    """Split/Inert/Ramified/Bad classification of p.

    Ramified means p divides the field discriminant and is checked before
    the bad set. Other primes dividing disc_poly are always bad.
    """
    if p < 2:
        raise ValueError(f"not a prime: {p}")
    splitting = ctx.field.splitting(p)
    if splitting is Splitting.RAMIFIED:
        return PrimeCase.RAMIFIED
    if p in bad_set:
        return PrimeCase.BAD
    return PrimeCase(splitting.value)


def _reduce_coords(
    coords: _Coords, ctx: QuadraticContext, p: int, case: PrimeCase, root: Optional[int]
) -> ResidueRep:
    cn, cd, dn, dd = coords
    c = _fraction_mod(cn, cd, p)
    d = _fraction_mod(dn, dd, p)
    if case is PrimeCase.SPLIT:
        if root is None:
            root = canonical_root(ctx.a1, ctx.a0, p) if d else 0
        value = (c + d * root) % p
        if value == 0:
            raise NotInvertibleError(p)
        return ResidueRep(case, p, value)
    if case is PrimeCase.INERT:
        if c == 0 and d == 0:
            raise NotInvertibleError(p)
        return ResidueRep(case, p, (c, d), (ctx.a1 % p, ctx.a0 % p))
    raise ContractViolation(f"cannot reduce at a {case.value} prime {p}")


def reduce(
    x: AlgebraicNumber, p: int, case: PrimeCase, ctx: QuadraticContext
) -> ResidueRep:
    """Image of x modulo p, with alpha sent to the canonical root (split) or T (inert).

    Raises:
        NotInvertibleError: If a denominator or the image vanishes mod p
        ContractViolation: If case is not Split or Inert
    """
    return _reduce_coords(_alpha_coords(ctx, x), ctx, p, case, None)


def element_order(g: ResidueRep, group_order: Factorization) -> int:
    """Exact multiplicative order of g given a factored multiple M of it.

    Raises:
        ContractViolation: If g**M != 1
    """
    order = group_order.value
    if not (g**order).is_one():
        raise ContractViolation(f"element does not have order dividing {order} mod {g.p}")
    for ell, e in group_order:
        for _ in range(e):
            if (g ** (order // ell)).is_one():
                order //= ell
            else:
                break
    return order


def rank_of_apparition(rec: Recurrence, p: int) -> Optional[int]:
    """Least n >= 0 with p | x_n, or None if p divides no term."""
    a1, a0 = rec.a1 % p, rec.a0 % p
    start = (rec.x0 % p, rec.x1 % p)
    x, y = start
    n = 0
    if a0:
        # the state map is invertible, so the orbit is a pure cycle
        while True:
            if x == 0:
                return n
            x, y = y, (a1 * y + a0 * x) % p
            n += 1
            if (x, y) == start:
                return None
    seen: set[tuple[int, int]] = set()
    while (x, y) not in seen:
        if x == 0:
            return n
        seen.add((x, y))
        x, y = y, (a1 * y + a0 * x) % p
        n += 1
    return None


def period_oracle(rec: Recurrence, p: int) -> bool:
    """Brute-force decision: does p divide some term?"""
    return rank_of_apparition(rec, p) is not None


def period_length(rec: Recurrence, p: int) -> int:
    """Period of the sequence mod p.

    Raises:
        ContractViolation: If p | a0
    """
    if rec.a0 % p == 0:
        raise ContractViolation(f"{p} divides a0; the sequence mod {p} is not periodic")
    a1, a0 = rec.a1 % p, rec.a0 % p
    start = (rec.x0 % p, rec.x1 % p)
    x, y = start
    n = 0
    while True:
        x, y = y, (a1 * y + a0 * x) % p
        n += 1
        if (x, y) == start:
            return n


def bad_primes(rec: Recurrence) -> frozenset[int]:
    """Primes dividing disc_poly, plus primes where q, r or their inverses fail to reduce."""
    ctx = quadratic_context(rec)
    q, r = initial_quotient(rec), root_quotient(rec)
    found: set[int] = set()
    for x in (q, q.inverse(), r, r.inverse()):
        c, d = ctx.alpha_coordinates(x)
        found.update(_prime_divisors(c.denominator))
        found.update(_prime_divisors(d.denominator))
    found.update(_prime_divisors(abs(ctx.disc_poly)))
    logger.debug(f"bad primes for {rec}: {sorted(found)}")
    return frozenset(found)


def _prime_divisors(n: int) -> list[int]:
    return list(factorize(n).primes) if n > 1 else []


class ResidueEngine:
    """Cached per-recurrence state for repeated per-prime decisions.

    swap_roots=True uses the other root labeling, i.e. (1/q, 1/r); every
    decision must come out the same.
    """

    def __init__(
        self,
        rec: Recurrence,
        swap_roots: bool = False,
        cache: Optional[FactorizationCache] = None,
    ):
        classification = classify(rec)
        if classification.is_degenerate:
            raise DegenerateRecurrenceError(classification)
        self.rec = rec
        self.classification = classification
        self.swap_roots = swap_roots
        self.context = quadratic_context(rec)
        self.q = initial_quotient(rec, swap=swap_roots)
        self.r = root_quotient(rec, swap=swap_roots)
        self.bad_set = bad_primes(rec)
        self.factorizations = cache if cache is not None else FactorizationCache()
        self._q_coords = _alpha_coords(self.context, self.q)
        self._r_coords = _alpha_coords(self.context, self.r)

    def prime_case(self, p: int) -> PrimeCase:
        return prime_case(p, self.context, self.bad_set)

    def residues(self, p: int, case: Optional[PrimeCase] = None) -> tuple[ResidueRep, ResidueRep]:
        """(q mod p, r mod p) for a good prime."""
        case = case or self.prime_case(p)
        if not case.is_good:
            raise ContractViolation(f"{p} is {case.value}; residues are undefined")
        root = None
        if case is PrimeCase.SPLIT and self.context.field_kind is FieldKind.QUADRATIC:
            root = canonical_root(self.context.a1, self.context.a0, p)
        q_bar = _reduce_coords(self._q_coords, self.context, p, case, root)
        r_bar = _reduce_coords(self._r_coords, self.context, p, case, root)
        return q_bar, r_bar

    def orders(self, p: int, case: Optional[PrimeCase] = None) -> tuple[int, int]:
        """(ord q, ord r) in the cyclic group of order p - 1 or p + 1."""
        q_bar, r_bar = self.residues(p, case)
        group = self.factorizations.factorize(q_bar.group_order)
        return element_order(q_bar, group), element_order(r_bar, group)

    def decide(self, p: int) -> PrimeVerdict:
        case = self.prime_case(p)
        if not case.is_good:
            return PrimeVerdict(p, case, period_oracle(self.rec, p), None, None, Method.ORACLE)
        ord_q, ord_r = self.orders(p, case)
        return PrimeVerdict(p, case, ord_r % ord_q == 0, ord_r, ord_q, Method.ORDERS)


@lru_cache(maxsize=32)
def engine_for(rec: Recurrence, swap_roots: bool = False) -> ResidueEngine:
    """Shared engine per recurrence (and orientation)."""
    return ResidueEngine(rec, swap_roots=swap_roots)


def divides_sequence(rec: Recurrence, p: int, swap_roots: bool = False) -> bool:
    """Does p divide some x_n? Orders for good primes, the period walk otherwise."""
    return engine_for(rec, swap_roots).decide(p).divides


def _ell_part(n: int, ell: int) -> int:
    part = 1
    while n % ell == 0:
        n //= ell
        part *= ell
    return part


def ell_part_inclusion(rec: Recurrence, p: int, ell: int) -> bool:
    """Does the ell-part of ord(q mod p) divide the ell-part of ord(r mod p)?"""
    ord_q, ord_r = engine_for(rec).orders(p)
    return _ell_part(ord_r, ell) % _ell_part(ord_q, ell) == 0


def _require_odd_inert(engine: ResidueEngine, p: int) -> None:
    if p == 2 or engine.prime_case(p) is not PrimeCase.INERT:
        raise ContractViolation(f"{p} is not an odd inert prime for {engine.rec}")


def check_43(rec: Recurrence, p: int) -> bool:
    """r**((p+1)/2) == (-1)**((p-1)/2) in F_p[T]/(f) at an odd inert prime."""
    engine = engine_for(rec)
    _require_odd_inert(engine, p)
    _, r_bar = engine.residues(p, PrimeCase.INERT)
    sign = 1 if (p - 1) // 2 % 2 == 0 else p - 1
    return (r_bar ** ((p + 1) // 2)).value == (sign, 0)


def check_44(rec: Recurrence, p: int) -> OddOrderCheck:
    """Odd order of q mod p in the norm-one kernel versus a quadratic-residue test.

    q has odd order iff it is a square there; a square root x of q satisfies
    (x + 1/x)**2 = 2 + q + 1/q, so the test is whether 2 + tr(q) is a square
    mod p. For the Lagarias recurrence 2 + tr(q) = -1/11.

    Raises:
        ContractViolation: If p is not inert, p != 1 mod 4, or 2 + tr(q) vanishes mod p
    """
    engine = engine_for(rec)
    _require_odd_inert(engine, p)
    if p % 4 != 1:
        raise ContractViolation(f"{p} is not 1 mod 4")
    ord_q, _ = engine.orders(p, PrimeCase.INERT)
    square_class: Fraction = 2 + engine.q.trace()
    residue = square_class.numerator * square_class.denominator % p
    if residue == 0:
        raise ContractViolation(f"2 + tr(q) vanishes modulo {p}")
    return OddOrderCheck(ord_q % 2 == 1, is_quad_residue(residue, p))
