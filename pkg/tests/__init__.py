"""Tests for recurrence-divisors."""
