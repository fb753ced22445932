"""Multiplicative dependence of q and r.

q is torsion modulo <r> iff q**a = r**b for some a > 0. Both sides are
compared through their prime-ideal valuation vectors: the vectors must be
proportional, and the quotient of matching powers must be a root of unity.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from sympy import factorint
from sympy.ntheory import sqrt_mod

from .quadratic import AlgebraicNumber, FieldKind, QuadraticField, Splitting

logger = logging.getLogger(__name__)

__all__ = ["ideal_valuations", "is_torsion_pair"]

# Prime ideals are labeled (p, k): k = 0, 1 for the two primes above a split
# p (ordered by the root of omega's polynomial mod p), k = 0 otherwise.
IdealLabel = tuple[int, int]


def _omega_roots(field: QuadraticField, p: int) -> list[int]:
    """Roots of T**2 - t*T - n0 mod a split prime p, ascending."""
    t, n0 = field.t, field.n0
    if p == 2:
        return [x for x in range(2) if (x * x - t * x - n0) % 2 == 0]
    inv2 = pow(2, -1, p)
    roots = {((t + s) * inv2) % p for s in sqrt_mod((t * t + 4 * n0) % p, p, all_roots=True)}
    return sorted(roots)


def _valuation(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def _integral_valuations(
    field: QuadraticField, a: int, b: int, primes: set[int]
) -> dict[IdealLabel, int]:
    """Valuations of the integral element a + b*omega at the primes above each p."""
    out: dict[IdealLabel, int] = {}
    norm = a * a + field.t * a * b - field.n0 * b * b
    for p in primes:
        kind = field.splitting(p)
        if kind is Splitting.RAMIFIED:
            out[(p, 0)] = _valuation(norm, p)
            continue
        ga, gb, content = a, b, 0
        while ga % p == 0 and gb % p == 0:
            ga, gb = ga // p, gb // p
            content += 1
        if kind is Splitting.INERT:
            out[(p, 0)] = content
            continue
        reduced_norm = ga * ga + field.t * ga * gb - field.n0 * gb * gb
        for k, root in enumerate(_omega_roots(field, p)):
            extra = _valuation(reduced_norm, p) if (ga + gb * root) % p == 0 else 0
            out[(p, k)] = content + extra
    return out


def ideal_valuations(x: AlgebraicNumber) -> dict[IdealLabel, int]:
    """Nonzero valuations of x at the prime ideals of its field.

    For rational x these are the ordinary p-adic valuations, labeled (p, 0).
    """
    if x.is_zero():
        raise ValueError("zero has no valuations")
    field = x.field
    if field.kind is FieldKind.RATIONAL:
        out = {(p, 0): e for p, e in factorint(abs(x.u.numerator)).items()}
        for p, e in factorint(x.u.denominator).items():
            out[(p, 0)] = -e
        return out

    m = x.denominator
    a, b = int(x.u * m), int(x.v * m)
    norm = a * a + field.t * a * b - field.n0 * b * b
    primes = set(factorint(abs(norm))) | set(factorint(m))
    numerator = _integral_valuations(field, a, b, primes)
    denominator = _integral_valuations(field, m, 0, primes)
    diff = {label: numerator.get(label, 0) - denominator.get(label, 0) for label in numerator}
    return {label: e for label, e in diff.items() if e != 0}


def is_torsion_pair(q: AlgebraicNumber, r: AlgebraicNumber) -> bool:
    """True iff q**a is a power of r for some a > 0.

    r must not be a root of unity.
    """
    vq, vr = ideal_valuations(q), ideal_valuations(r)
    if not vr:
        # r is a unit of infinite order, so the field is real quadratic with
        # unit rank one: any unit q is dependent on r, a non-unit never is.
        return not vq

    pivot = min(vr)
    ratio = Fraction(vq.get(pivot, 0), vr[pivot])
    for label in set(vq) | set(vr):
        if vq.get(label, 0) != ratio * vr.get(label, 0):
            logger.debug(f"valuations not proportional at {label}: {vq} vs {vr}")
            return False

    n, m = ratio.numerator, ratio.denominator
    unit = q**m * r ** (-n)
    return unit.is_root_of_unity()
