"""recurrence-divisors - which primes divide some term of a second-order linear recurrence."""

__version__ = "0.1.0"
