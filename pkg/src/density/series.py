"""Inclusion-exclusion series for the densities and their tail bounds.

The split density of the Lagarias sequence is

    (1/2) * sum_i sum_j 2**t(i, j) * mu(j) / (i**2 * j * phi(ij)),

where t counts which of 4, 5, 11 divide ij (see lemma41_degree). For j
squarefree, phi(ij) factors as phi(i) * prod_{p | j} c_i(p) with
c_i(p) = p if p | i and p - 1 otherwise, so for fixed i the full j-sum is an
Euler product over primes outside {2, 5, 11} times a finite sum over the
subsets of {2, 5, 11}. truncated_split_sum uses that closed j-sum to bound
its own truncation error.
"""

from __future__ import annotations

import logging
import math
import sys
from fractions import Fraction
from functools import reduce
from itertools import combinations
from operator import mul
from typing import Callable, Optional

import numpy as np
from sympy import factorint, primefactors

from ..arith.factorization import factorize
from ..arith.primes import mobius_table, totient_table
from ..config import DEFAULT_ARTIN_PRIME_BOUND
from .approx import ApproxReal, ExactRational
from .products import _artin_constant, artin_factor, log_product, prime_square_tail

logger = logging.getLogger(__name__)

__all__ = [
    "DensityError",
    "UnsupportedBase",
    "artin_additive",
    "lemma41_degree",
    "s_mn",
    "s_mn_partial",
    "split_inner_coefficient",
    "truncated_split_sum",
    "two_variable_sum_generic",
    "violation_density",
    "violation_k_sum",
    "violation_level_density",
]

SPECIAL_PRIMES = (2, 5, 11)
# |inner j-sum at i| <= INNER_BOUND / (i**2 * phi(i)) for every i
INNER_BOUND = 6
_EPS = sys.float_info.epsilon


class DensityError(Exception):
    """Base error for density evaluation."""

    pass


class UnsupportedBase(DensityError):
    """Artin base outside the positive squarefree class."""

    def __init__(self, base: int):
        self.base = base
        super().__init__(f"base {base} is not a positive squarefree integer >= 2")


def _t_exponent(i: int, j: int) -> int:
    ij = i * j
    if i % 2 == 0:
        divisors: tuple[int, ...] = (4, 5, 11)
    elif j % 2 == 0:
        divisors = (4, 5)
    else:
        divisors = (5,)
    return sum(1 for d in divisors if ij % d == 0)


def _totient(n: int) -> int:
    out = n
    for p in factorize(n).primes:
        out -= out // p
    return out


def lemma41_degree(i: int, j: int) -> int:
    """Degree 2**(1 - t) * i**2 * j * phi(ij) of the field cut out at level (i, j).

    t = #{d in {4, 5, 11} : d | ij} for even i, #{d in {4, 5} : d | ij} for odd i
    and even j, and [5 | ij] when ij is odd.
    """
    if i < 1 or j < 1:
        raise ValueError(f"indices must be positive, got ({i}, {j})")
    base = i * i * j * _totient(i * j)
    return 2 * base >> _t_exponent(i, j)


def s_mn(m: int, n: int) -> ExactRational:
    """Exact rational c with S_{m,n} = c * S.

    c = 1/(m n)**3 * prod_{p | n} -p**4/(p**3 - p - 1)
                  * prod_{p | m, p not | n} (p**3 + p**2)/(p**3 - p - 1)
    """
    if m < 1 or n < 1:
        raise ValueError(f"indices must be positive, got ({m}, {n})")
    coefficient = Fraction(1, (m * n) ** 3)
    for p in primefactors(n):
        coefficient *= Fraction(-(p**4), p**3 - p - 1)
    for p in primefactors(m):
        if n % p:
            coefficient *= Fraction(p**3 + p**2, p**3 - p - 1)
    return coefficient


def _squarefree_range(j_max: int) -> tuple[np.ndarray, np.ndarray]:
    mu = mobius_table(j_max)
    js = np.flatnonzero(mu[1:]) + 1
    return js.astype(np.int64), mu[js].astype(np.float64)


def s_mn_partial(m: int, n: int, i_max: int, j_max: int) -> float:
    """Truncation of sum_{m | i} sum_{mn | ij} mu(j)/(i**2 j phi(ij)); tends to s_mn(m, n) * S."""
    js, signs = _squarefree_range(j_max)
    phi = totient_table(i_max * j_max)
    partials = []
    for i in range(m, i_max + 1, m):
        ij = i * js
        keep = ij % (m * n) == 0
        terms = signs[keep] / (float(i * i) * js[keep] * phi[ij[keep]])
        partials.append(math.fsum(terms.tolist()))
    return math.fsum(partials)


def _split_terms(i: int, js: np.ndarray, signs: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """Vector of mu(j)/lemma41_degree(i, j) over the squarefree js."""
    ij = i * js
    if i % 2 == 0:
        t = (ij % 4 == 0).astype(np.int64) + (ij % 5 == 0) + (ij % 11 == 0)
    else:
        t = np.where(js % 2 == 0, (ij % 4 == 0).astype(np.int64) + (ij % 5 == 0), ij % 5 == 0)
    return signs * np.exp2(t) / (2.0 * i * i * js * phi[ij])


def _rho(i: int) -> Fraction:
    """prod over p | i outside {2, 5, 11} of (1 - 1/p**2)/(1 - 1/(p(p - 1)))."""
    out = Fraction(1)
    for p in primefactors(i):
        if p not in SPECIAL_PRIMES:
            out *= Fraction(p**3 - p**2 - p + 1, p**3 - p**2 - p)
    return out


def split_inner_coefficient(i: int) -> Fraction:
    """Exact c_i with sum_j mu(j)/lemma41_degree(i, j) = c_i * B.

    B = prod_{p not in {2, 5, 11}} (1 - 1/(p(p - 1))) is Artin's constant with
    the factors at 2, 5, 11 removed.
    """
    phi_i = _totient(i)
    total = Fraction(0)
    for size in range(len(SPECIAL_PRIMES) + 1):
        for subset in combinations(SPECIAL_PRIMES, size):
            j = reduce(mul, subset, 1)
            weight = Fraction(1)
            for p in subset:
                c = p if i % p == 0 else p - 1
                weight *= Fraction(-1, p * c)
            total += weight * (2 ** _t_exponent(i, j))
    return _rho(i) * total / (2 * i * i * phi_i)


def _reduced_artin_constant(prime_bound: int) -> ApproxReal:
    """B = A / prod_{p in {2, 5, 11}} (1 - 1/(p(p - 1)))."""
    removed = reduce(mul, (artin_factor(p) for p in SPECIAL_PRIMES), Fraction(1))
    return _artin_constant(prime_bound) * (1 / removed)


def truncated_split_sum(
    i_max: int, j_max: int, prime_bound: int = DEFAULT_ARTIN_PRIME_BOUND
) -> ApproxReal:
    """Partial double sum over i <= i_max and squarefree j <= j_max.

    abs_error bounds the full remainder: the j-tails for i <= i_max come from
    the closed j-sum (Artin-type constant to prime_bound), and the i-tail uses
    |inner(i)| <= INNER_BOUND/(i**2 phi(i)) with phi(i) >= sqrt(i/2).
    """
    if i_max < 1 or j_max < 1:
        raise ValueError(f"truncation must be positive, got ({i_max}, {j_max})")
    js, signs = _squarefree_range(j_max)
    phi = totient_table(i_max * j_max)

    partials: list[float] = []
    closed: list[float] = []
    magnitude = 0.0
    for i in range(1, i_max + 1):
        terms = _split_terms(i, js, signs, phi)
        partials.append(math.fsum(terms.tolist()))
        magnitude += float(np.abs(terms).sum())
        closed.append(float(split_inner_coefficient(i)))
    value = math.fsum(partials)

    reduced = _reduced_artin_constant(prime_bound)
    closed_total = math.fsum(closed)
    closed_abs = math.fsum(abs(c) for c in closed)
    j_tail = abs(float(reduced.value) * closed_total - value)
    constant_error = float(reduced.abs_error) * closed_abs
    i_tail = INNER_BOUND * _inverse_phi_power_tail(i_max + 1, 2.0)
    rounding = 8 * _EPS * (magnitude + float(reduced.value) * closed_abs + abs(value))

    logger.debug(
        f"truncated_split_sum({i_max}, {j_max}): value={value:.12f} "
        f"j_tail={j_tail:.3e} i_tail={i_tail:.3e}"
    )
    return ApproxReal.from_float(value, j_tail + constant_error + i_tail + rounding)


def _inverse_phi_power_tail(start: int, power: float) -> float:
    """Upper bound for sum_{n >= start} 1/(n**power * phi(n)) using phi(n) >= sqrt(n/2)."""
    exponent = power + 0.5
    # integral from start - 1, which also covers the first term
    return math.sqrt(2) * (max(start - 1, 1) ** (1 - exponent)) / (exponent - 1) + (
        math.sqrt(2) if start == 1 else 0.0
    )


def two_variable_sum_generic(
    degree_oracle: Callable[[int, int], int],
    i_max: int,
    j_max: int,
    degree_floor: Fraction = Fraction(1, 4),
) -> ApproxReal:
    """sum_{i <= i_max} sum_{j <= j_max squarefree} mu(j)/degree_oracle(i, j).

    The tail bound assumes degree_oracle(i, j) >= degree_floor * i**2 * j * phi(ij),
    which holds for both the naive degree and lemma41_degree.
    """
    if i_max < 1 or j_max < 1:
        raise ValueError(f"truncation must be positive, got ({i_max}, {j_max})")
    js, signs = _squarefree_range(j_max)
    pairs = list(zip(js.tolist(), signs.tolist()))
    partials = []
    magnitude = 0.0
    for i in range(1, i_max + 1):
        terms = [mu / degree_oracle(i, j) for j, mu in pairs]
        partials.append(math.fsum(terms))
        magnitude += math.fsum(abs(t) for t in terms)
    value = math.fsum(partials)

    phi = totient_table(max(i_max, j_max))
    i_head = math.fsum(1.0 / (i * i * int(phi[i])) for i in range(1, i_max + 1))
    j_head = math.fsum(1.0 / (j * int(phi[j])) for j in js.tolist())
    # phi(ij) >= phi(i) phi(j)
    j_tail = _inverse_phi_power_tail(j_max + 1, 1.0)
    i_tail = _inverse_phi_power_tail(i_max + 1, 2.0)
    bound = (i_head * j_tail + i_tail * (j_head + j_tail)) / float(degree_floor)
    rounding = 8 * _EPS * (magnitude + abs(value))
    return ApproxReal.from_float(value, bound + rounding)


def _check_artin_base(r: int) -> None:
    if r < 2 or any(e > 1 for e in factorint(r).values()):
        raise UnsupportedBase(r)


def artin_additive(
    r: int, j_max: int, prime_bound: int = DEFAULT_ARTIN_PRIME_BOUND
) -> ApproxReal:
    """sum_{j <= j_max} mu(j)/[F_j : Q] for the primitive-root density of r.

    [F_j : Q] = j*phi(j), halved when j is even and d | j, where d is the
    discriminant of Q(sqrt(r)). The error bound covers the untruncated sum:
    the plain series converges to Artin's constant (certified to prime_bound)
    and the extra halved terms are bounded by an Euler product.

    Raises:
        UnsupportedBase: If r is not a squarefree integer >= 2
    """
    _check_artin_base(r)
    if j_max < 1:
        raise ValueError(f"j_max must be positive, got {j_max}")
    d = r if r % 4 == 1 else 4 * r
    js, signs = _squarefree_range(j_max)
    phi = totient_table(j_max)
    plain = signs / (js * phi[js].astype(np.float64))
    entangled = (js % 2 == 0) & (js % d == 0)
    plain_sum = math.fsum(plain.tolist())
    value = plain_sum + math.fsum(plain[entangled].tolist())

    artin = _artin_constant(prime_bound)
    bound = abs(float(artin.value) - plain_sum) + float(artin.abs_error)
    if d == r:
        bound += _entangled_tail(r, j_max, prime_bound)
    bound += 8 * _EPS * (float(np.abs(plain).sum()) + abs(value))
    return ApproxReal.from_float(value, bound)


def _entangled_tail(r: int, j_max: int, prime_bound: int) -> float:
    """Bound on sum over squarefree j = 2r*k > j_max of 1/(j phi(j))."""
    two_r = 2 * r
    excluded = tuple(primefactors(two_r))
    log_sum, rounding = log_product(
        prime_bound, lambda p: np.log1p(1.0 / (p * p - p)), exclude=excluded
    )
    tail = (1 + 2.0 / prime_bound) * (1 + 3.0 / prime_bound**2) * prime_square_tail(prime_bound)
    full_upper = math.exp(log_sum + tail + rounding) * (1 + 4 * _EPS)

    k_max = j_max // two_r
    head = 0.0
    if k_max >= 1:
        js, _ = _squarefree_range(k_max)
        phi = totient_table(k_max)
        coprime = np.gcd(js, two_r) == 1
        ks = js[coprime]
        head = math.fsum((1.0 / (ks * phi[ks].astype(np.float64))).tolist())
    phi_two_r = _totient(two_r)
    return max(full_upper - head, 0.0) / (two_r * phi_two_r) * (1 + 4 * _EPS)


def violation_density(ell: int) -> ExactRational:
    """ell/(ell**3 - 1): density of primes where the ell-part inclusion fails."""
    return Fraction(ell, ell**3 - 1)


def violation_level_density(ell: int, k: int) -> ExactRational:
    """Density of failures at ell-adic level k, summed from the per-step sets.

    Equals (ell**-k - ell**(-3k))/(ell + 1).
    """
    x = Fraction(1, ell)
    return x**k * sum(x**i * (x ** (i - 1) - x**i) for i in range(1, k + 1))


def violation_k_sum(ell: int, k_max: Optional[int] = None) -> ExactRational:
    """sum_{k >= 1} (ell**-k - ell**(-3k))/(ell + 1), partial to k_max or complete.

    The complete sum is evaluated as two geometric series.
    """
    x = Fraction(1, ell)
    if k_max is None:
        return (x / (1 - x) - x**3 / (1 - x**3)) / (ell + 1)
    return sum(((x**k - x ** (3 * k)) / (ell + 1) for k in range(1, k_max + 1)), Fraction(0))
