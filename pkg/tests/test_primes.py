"""Tests for prime enumeration and arithmetic tables."""

import numpy as np
import pytest

from src.arith.primes import (
    base_primes,
    enumerate_primes,
    iter_prime_segments,
    mobius_table,
    prime_count,
    primes_up_to,
    totient_table,
)


class TestEnumeratePrimes:
    """Tests for the segmented sieve."""

    def test_primes_up_to_ten(self):
        """Test the primes below 10."""
        assert list(enumerate_primes(10)) == [2, 3, 5, 7]

    def test_limit_two(self):
        """Test that limit 2 yields only 2."""
        assert list(enumerate_primes(2)) == [2]

    def test_limit_is_inclusive(self):
        """Test that a prime limit is included."""
        assert list(enumerate_primes(13))[-1] == 13

    def test_limit_below_two_raises(self):
        """Test that limits below 2 are rejected."""
        with pytest.raises(ValueError, match="at least 2"):
            list(enumerate_primes(1))

    def test_small_segments_match_single_sieve(self):
        """Test that tiny segments give the same primes as one sieve."""
        expected = base_primes(5000).tolist()

        assert list(enumerate_primes(5000, segment_size=64)) == expected
        assert list(enumerate_primes(5000, segment_size=7)) == expected

    def test_segments_are_ascending_and_disjoint(self):
        """Test that segments concatenate into a strictly increasing sequence."""
        merged = np.concatenate(list(iter_prime_segments(20000, segment_size=1000)))

        assert np.all(np.diff(merged) > 0)
        assert merged[0] == 2

    def test_prime_count_small(self):
        """Test known values of pi(x)."""
        assert prime_count(100) == 25
        assert prime_count(1000) == 168
        assert prime_count(10**5) == 9592

    def test_primes_up_to_empty_below_two(self):
        """Test that primes_up_to returns an empty array below 2."""
        assert len(primes_up_to(1)) == 0

    @pytest.mark.slow
    def test_prime_count_million(self):
        """Test that there are 78498 primes below 10**6."""
        assert prime_count(10**6) == 78498


class TestArithmeticTables:
    """Tests for the Mobius and totient tables."""

    def test_mobius_values(self):
        """Test mu on the first few integers."""
        mu = mobius_table(12)

        assert mu[1:].tolist() == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]

    def test_mobius_squarefree_products(self):
        """Test mu on products of distinct primes."""
        mu = mobius_table(110)

        assert mu[110] == -1  # 2 * 5 * 11
        assert mu[30] == -1
        assert mu[22] == 1

    def test_totient_values(self):
        """Test phi on the first few integers."""
        phi = totient_table(12)

        assert phi[1:].tolist() == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]

    def test_totient_of_prime_powers(self):
        """Test phi(p**k) = p**(k-1) * (p - 1)."""
        phi = totient_table(1024)

        assert phi[1024] == 512
        assert phi[625] == 500
        assert phi[343] == 294
