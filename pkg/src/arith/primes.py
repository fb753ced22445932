"""Prime enumeration and arithmetic-function tables.

The segmented sieve walks odd numbers only and keeps one segment plus the
base primes below sqrt(limit) in memory. The Möbius and totient tables are
plain numpy sieves used by the density series.
"""

import logging
import math
from typing import Iterator

import numpy as np

from ..config import DEFAULT_SEGMENT_SIZE

logger = logging.getLogger(__name__)

__all__ = [
    "DEFAULT_SEGMENT_SIZE",
    "base_primes",
    "iter_prime_segments",
    "enumerate_primes",
    "primes_up_to",
    "prime_count",
    "mobius_table",
    "totient_table",
]


def base_primes(n: int) -> np.ndarray:
    """Primes <= n from a single unsegmented sieve.

    Only meant for small n (sieving primes, trial-division lists).
    """
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(n + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for i in range(3, math.isqrt(n) + 1, 2):
        if flags[i]:
            flags[i * i :: 2 * i] = False
    return np.flatnonzero(flags).astype(np.int64)


def iter_prime_segments(
    limit: int, segment_size: int = DEFAULT_SEGMENT_SIZE
) -> Iterator[np.ndarray]:
    """Yield ascending arrays of primes <= limit, one sieve segment at a time.

    Args:
        limit: Inclusive upper bound
        segment_size: Width of each segment in integers (rounded down to even)

    Yields:
        int64 arrays; concatenated they are exactly the primes <= limit
    """
    if limit < 2:
        return
    span = max(2, segment_size - segment_size % 2)
    sieving = base_primes(math.isqrt(limit))[1:].tolist()

    yield np.array([2], dtype=np.int64)

    low = 3
    while low <= limit:
        high = min(low + span, limit + 1)
        # index k stands for the odd number low + 2k
        flags = np.ones((high - low + 1) // 2, dtype=bool)
        for p in sieving:
            if p * p >= high:
                break
            start = max(p * p, -(-low // p) * p)
            if start % 2 == 0:
                start += p
            flags[(start - low) // 2 :: p] = False
        yield low + 2 * np.flatnonzero(flags).astype(np.int64)
        low += span


def enumerate_primes(limit: int, segment_size: int = DEFAULT_SEGMENT_SIZE) -> Iterator[int]:
    """Stream all primes <= limit in ascending order.

    Raises:
        ValueError: If limit < 2
    """
    if limit < 2:
        raise ValueError(f"limit must be at least 2, got {limit}")
    for segment in iter_prime_segments(limit, segment_size):
        yield from segment.tolist()


def primes_up_to(limit: int, segment_size: int = DEFAULT_SEGMENT_SIZE) -> np.ndarray:
    """All primes <= limit as one int64 array (empty below 2)."""
    segments = list(iter_prime_segments(limit, segment_size))
    if not segments:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate(segments)


def prime_count(limit: int, segment_size: int = DEFAULT_SEGMENT_SIZE) -> int:
    """Number of primes <= limit."""
    return sum(len(segment) for segment in iter_prime_segments(limit, segment_size))


def mobius_table(n: int) -> np.ndarray:
    """mu(k) for 0 <= k <= n as int8 (entry 0 is unused and set to 0)."""
    mu = np.ones(n + 1, dtype=np.int8)
    mu[0] = 0
    for p in base_primes(n).tolist():
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
    return mu


def totient_table(n: int) -> np.ndarray:
    """phi(k) for 0 <= k <= n as int64 (entry 0 is 0)."""
    phi = np.arange(n + 1, dtype=np.int64)
    for p in base_primes(n).tolist():
        phi[p::p] -= phi[p::p] // p
    return phi
