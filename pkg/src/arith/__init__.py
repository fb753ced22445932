"""Shared number-theory plumbing: prime sieves, arithmetic tables, factorization."""

from .factorization import Factorization, FactorizationCache, factorize
from .primes import (
    enumerate_primes,
    iter_prime_segments,
    mobius_table,
    prime_count,
    primes_up_to,
    totient_table,
)

__all__ = [
    "Factorization",
    "FactorizationCache",
    "factorize",
    "enumerate_primes",
    "iter_prime_segments",
    "mobius_table",
    "prime_count",
    "primes_up_to",
    "totient_table",
]
