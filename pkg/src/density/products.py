"""Truncated Euler products with certified tail bounds.

Both constants are products of factors 1 - x_p with 0 < x_p <= 1/p**2 up to
a factor (1 + 2/p). The logarithm of each factor is summed in float64 with
math.fsum and exponentiated at PRECISION_BITS. The omitted primes p > B are
bounded by the 6k +/- 1 wheel estimate

    sum_{p > B} 1/p**2 <= 1/(3B) + 2/B**2,

so the true product lies in [P_B * (1 - tail), P_B].
"""

import logging
import math
import sys
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import numpy as np
from mpmath import exp, mpf, workprec

from ..arith.primes import iter_prime_segments
from ..config import MIN_PRIME_BOUND
from .approx import PRECISION_BITS, ApproxReal, ExactRational

logger = logging.getLogger(__name__)

__all__ = [
    "MIN_PRIME_BOUND",
    "artin_factor",
    "artin_product",
    "euler_factor",
    "euler_S",
    "log_product",
    "prime_square_tail",
    "two_variable_product",
]

_EPS = sys.float_info.epsilon


def euler_factor(p: int) -> Fraction:
    """1 - p/(p**3 - 1), the local factor of S."""
    return 1 - Fraction(p, p**3 - 1)


def artin_factor(ell: int) -> Fraction:
    """1 - 1/(ell*(ell - 1)), the local factor of Artin's constant."""
    return 1 - Fraction(1, ell * (ell - 1))


def prime_square_tail(bound: int) -> float:
    """Upper bound for the sum of 1/p**2 over primes p > bound (bound >= 3)."""
    return 1.0 / (3 * bound) + 2.0 / bound**2


def log_product(
    prime_bound: int, log_term: Callable[[np.ndarray], np.ndarray], exclude: tuple[int, ...] = ()
) -> tuple[float, float]:
    """Sum log_term over primes <= prime_bound.

    Returns:
        (sum, rounding bound) where the bound covers the per-term float error
        and the two-level fsum reduction
    """
    partials: list[float] = []
    magnitude = 0.0
    for segment in iter_prime_segments(prime_bound):
        if exclude:
            segment = segment[~np.isin(segment, exclude)]
        terms = log_term(segment.astype(np.float64))
        partials.append(math.fsum(terms.tolist()))
        magnitude += float(np.abs(terms).sum())
    total = math.fsum(partials)
    return total, 8 * _EPS * (magnitude + abs(total))


def _certified_product(log_sum: float, rounding: float, tail: float) -> ApproxReal:
    """exp(log_sum) with truncation tail (relative, one-sided) and log rounding."""
    with workprec(PRECISION_BITS):
        value = exp(mpf(log_sum))
        # |exp(d) - 1| <= 2|d| for the tiny d involved here
        error = value * (mpf(tail) + 2 * mpf(rounding))
        return ApproxReal(value, error)


def _check_bound(prime_bound: int) -> None:
    if prime_bound < MIN_PRIME_BOUND:
        raise ValueError(f"prime_bound must be at least {MIN_PRIME_BOUND}, got {prime_bound}")


@lru_cache(maxsize=8)
def euler_S(prime_bound: int) -> ApproxReal:
    """S = prod_p (1 - p/(p**3 - 1)) truncated at prime_bound, with its error bound.

    Args:
        prime_bound: Largest prime included (>= 100)

    Returns:
        ApproxReal whose value decreases as prime_bound grows
    """
    _check_bound(prime_bound)
    # p/(p**3 - 1) = 1/(p**2 - 1/p)
    log_sum, rounding = log_product(prime_bound, lambda p: np.log1p(-1.0 / (p * p - 1.0 / p)))
    b = prime_bound
    # -log(1 - x_p) <= x_p (1 + 2 x_p) and x_p <= (1 + 2/p**3)/p**2
    tail = (1 + 3.0 / b**2) * prime_square_tail(b)
    result = _certified_product(log_sum, rounding, tail)
    logger.info(f"euler_S({prime_bound}) = {result}")
    return result


@lru_cache(maxsize=8)
def _artin_constant(prime_bound: int) -> ApproxReal:
    _check_bound(prime_bound)
    log_sum, rounding = log_product(prime_bound, lambda p: np.log1p(-1.0 / (p * p - p)))
    b = prime_bound
    # 1/(p(p-1)) <= (1 + 2/p)/p**2
    tail = (1 + 2.0 / b) * (1 + 3.0 / b**2) * prime_square_tail(b)
    result = _certified_product(log_sum, rounding, tail)
    logger.info(f"Artin constant to {prime_bound} = {result}")
    return result


def artin_product(correction: ExactRational, prime_bound: int) -> ApproxReal:
    """correction * prod_ell (1 - 1/(ell(ell - 1))) truncated at prime_bound."""
    return _artin_constant(prime_bound) * Fraction(correction)


def two_variable_product(correction: ExactRational, prime_bound: int) -> ApproxReal:
    """correction * S with S from euler_S(prime_bound)."""
    return euler_S(prime_bound) * Fraction(correction)
