"""Integer factorization for group orders p - 1 and p + 1.

Trial division by the primes below TRIAL_DIVISION_BOUND handles everything a
desk-scale sieve produces; larger cofactors go to Pollard rho with a
primality check on every cofactor.
"""

import logging
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from sympy import factorint, isprime
from sympy.ntheory import pollard_rho

from .primes import base_primes

logger = logging.getLogger(__name__)

__all__ = [
    "Factorization",
    "FactorizationCache",
    "factorize",
    "TRIAL_DIVISION_BOUND",
]

TRIAL_DIVISION_BOUND = 10_000
RHO_RETRIES = 8


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs, primes ascending."""

    pairs: tuple[tuple[int, int], ...] = ()

    @property
    def value(self) -> int:
        """The factored integer."""
        n = 1
        for p, e in self.pairs:
            n *= p**e
        return n

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def exponent(self, p: int) -> int:
        """Exponent of p (0 when p does not divide)."""
        for prime, e in self.pairs:
            if prime == p:
                return e
        return 0

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


@lru_cache(maxsize=1)
def _trial_primes() -> tuple[int, ...]:
    return tuple(base_primes(TRIAL_DIVISION_BOUND).tolist())


def _split_cofactor(n: int, found: dict[int, int]) -> None:
    """Fully factor n (> 1, no small prime factors) into found."""
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if isprime(m):
            found[m] = found.get(m, 0) + 1
            continue
        divisor: Optional[int] = None
        for attempt in range(RHO_RETRIES):
            divisor = pollard_rho(m, a=attempt + 1, seed=m + attempt)
            if divisor and 1 < divisor < m:
                break
            divisor = None
        if divisor is None:
            logger.warning(f"Pollard rho failed on {m}, falling back to factorint")
            for p, e in factorint(m).items():
                found[p] = found.get(p, 0) + e
            continue
        stack.extend((divisor, m // divisor))


def factorize(n: int) -> Factorization:
    """Complete prime factorization of n.

    Args:
        n: Positive integer

    Returns:
        Factorization with ascending primes; empty for n = 1

    Raises:
        ValueError: If n < 1
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    found: dict[int, int] = {}
    for p in _trial_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    if n > 1:
        if n < TRIAL_DIVISION_BOUND**2:
            found[n] = found.get(n, 0) + 1
        else:
            _split_cofactor(n, found)
    return Factorization(tuple(sorted(found.items())))


class FactorizationCache:
    """Thread-safe memo of factorizations.

    Values are canonical, so a lost race only costs a recomputation.
    """

    def __init__(self, max_entries: int = 1 << 20):
        self._entries: dict[int, Factorization] = {}
        self._lock = threading.Lock()
        self._max_entries = max_entries
        self.hits = 0
        self.misses = 0

    def factorize(self, n: int) -> Factorization:
        """Memoized factorize(n)."""
        cached = self._entries.get(n)
        if cached is not None:
            self.hits += 1
            return cached
        self.misses += 1
        result = factorize(n)
        with self._lock:
            if len(self._entries) >= self._max_entries:
                self._entries.clear()
            self._entries[n] = result
        return result

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()

    def __len__(self) -> int:
        return len(self._entries)
