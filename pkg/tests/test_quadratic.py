"""Tests for quadratic-field arithmetic."""

from fractions import Fraction

import pytest

from src.algebra.quadratic import (
    BasisMode,
    FieldKind,
    QuadraticContext,
    QuadraticField,
    Splitting,
    squarefree_decomposition,
)


class TestSquarefreeDecomposition:
    """Tests for squarefree_decomposition."""

    def test_squarefree_input(self):
        """Test that a squarefree integer is its own core."""
        assert squarefree_decomposition(5) == (5, 1)

    def test_square_factor_removed(self):
        """Test 12 = 2**2 * 3."""
        assert squarefree_decomposition(12) == (3, 2)

    def test_negative_keeps_sign(self):
        """Test -8 = 2**2 * (-2)."""
        assert squarefree_decomposition(-8) == (-2, 2)

    def test_perfect_square(self):
        """Test that a square has core 1."""
        assert squarefree_decomposition(36) == (1, 6)

    def test_zero_raises(self):
        """Test that zero is rejected."""
        with pytest.raises(ValueError):
            squarefree_decomposition(0)


class TestQuadraticField:
    """Tests for QuadraticField bases and discriminants."""

    def test_half_integer_basis_for_one_mod_four(self):
        """Test that D = 5 uses omega = (1 + sqrt(5))/2."""
        field = QuadraticField(5)

        assert field.kind is FieldKind.QUADRATIC
        assert field.basis_mode is BasisMode.HALF_INTEGER
        assert (field.t, field.n0) == (1, 1)
        assert field.discriminant == 5

    def test_sqrt_basis_otherwise(self):
        """Test that D = -1 and D = 2 use omega = sqrt(D)."""
        assert QuadraticField(-1).basis_mode is BasisMode.SQRT
        assert QuadraticField(2).discriminant == 8
        assert QuadraticField(-1).discriminant == -4

    def test_negative_one_mod_four(self):
        """Test that D = -3 is half-integral with n0 = -1."""
        field = QuadraticField(-3)

        assert field.basis_mode is BasisMode.HALF_INTEGER
        assert field.n0 == -1

    def test_rational_field(self):
        """Test that D = 1 is the rational field."""
        field = QuadraticField(1)

        assert field.kind is FieldKind.RATIONAL
        assert field.basis_mode is BasisMode.SQRT
        assert field.discriminant == 1

    def test_every_prime_splits_in_rational_field(self):
        """Test that Q has no ramified or inert primes."""
        field = QuadraticField(1)

        assert {field.splitting(p) for p in (2, 3, 5, 7, 11)} == {Splitting.SPLIT}

    def test_splitting_at_two(self):
        """Test that 2 ramifies in Q(sqrt(2)), splits in Q(sqrt(-7)) and is inert in Q(sqrt(5))."""
        assert QuadraticField(2).splitting(2) is Splitting.RAMIFIED
        assert QuadraticField(-7).splitting(2) is Splitting.SPLIT
        assert QuadraticField(5).splitting(2) is Splitting.INERT

    def test_from_sqrt(self):
        """Test that sqrt(5) = 2*omega - 1."""
        field = QuadraticField(5)
        root5 = field.from_sqrt(0, 1)

        assert (root5.u, root5.v) == (-1, 2)
        assert root5 * root5 == 5


class TestAlgebraicNumber:
    """Tests for AlgebraicNumber arithmetic."""

    def setup_method(self):
        """Set up test fixtures."""
        self.field = QuadraticField(5)
        self.omega = self.field.element(0, 1)

    def test_omega_minimal_polynomial(self):
        """Test omega**2 = omega + 1."""
        assert self.omega * self.omega == self.omega + 1

    def test_norm_and_trace(self):
        """Test norm and trace of omega and of 10 + 3*omega."""
        x = self.field.element(10, 3)

        assert self.omega.norm() == -1
        assert self.omega.trace() == 1
        assert x.norm() == 121
        assert x.trace() == 23

    def test_conjugate_is_other_root(self):
        """Test conj(omega) = 1 - omega."""
        assert self.omega.conjugate() == 1 - self.omega

    def test_inverse(self):
        """Test x * x**-1 = 1."""
        x = self.field.element(Fraction(2, 3), -7)

        assert x * x.inverse() == 1
        assert x ** -2 * x**2 == 1

    def test_inverse_of_zero_raises(self):
        """Test that zero has no inverse."""
        with pytest.raises(ZeroDivisionError):
            self.field.element(0).inverse()

    def test_equality_with_rationals(self):
        """Test comparisons against int and Fraction."""
        assert self.field.element(3) == 3
        assert self.field.element(Fraction(1, 2)) == Fraction(1, 2)
        assert self.omega != 1

    def test_hash_consistent_with_rational_equality(self):
        """Test that rational elements hash like their value."""
        assert hash(self.field.element(Fraction(1, 2))) == hash(Fraction(1, 2))

    def test_field_mismatch_raises(self):
        """Test that elements of different fields cannot be combined."""
        with pytest.raises(ValueError, match="field mismatch"):
            self.omega + QuadraticField(2).element(0, 1)

    def test_rational_field_rejects_omega_component(self):
        """Test that Q has no omega coordinate."""
        with pytest.raises(ValueError):
            QuadraticField(1).element(1, 1)

    def test_denominator(self):
        """Test the least common denominator of the coordinates."""
        assert self.field.element(Fraction(-10, 11), Fraction(-3, 11)).denominator == 11
        assert self.field.element(Fraction(1, 4), Fraction(1, 6)).denominator == 12

    def test_sqrt_coordinates_and_str(self):
        """Test rendering in the a + b*sqrt(D) form."""
        r = self.field.element(-1, -1)

        assert r.sqrt_coordinates() == (Fraction(-3, 2), Fraction(-1, 2))
        assert str(r) == "-3/2 - 1/2*sqrt(5)"

    def test_roots_of_unity(self):
        """Test detection of roots of unity in Q(i), Q(sqrt(-3)) and Q(sqrt(5))."""
        i = QuadraticField(-1).element(0, 1)
        zeta6 = QuadraticField(-3).element(0, 1)

        assert i.is_root_of_unity()
        assert zeta6.is_root_of_unity()
        assert self.field.element(-1).is_root_of_unity()
        assert not self.omega.is_root_of_unity()
        assert not (-self.omega * self.omega).is_root_of_unity()


class TestQuadraticContext:
    """Tests for QuadraticContext."""

    def test_lagarias_context(self):
        """Test f = T**2 - T - 1."""
        ctx = QuadraticContext.from_coefficients(1, 1)

        assert (ctx.disc_poly, ctx.D, ctx.sqrt_cofactor) == (5, 5, 1)
        assert ctx.alpha() == ctx.field.element(0, 1)
        assert ctx.alpha(swap=True) == 1 - ctx.field.element(0, 1)

    def test_square_cofactor(self):
        """Test f = T**2 - 2T - 2 with disc 12 = 2**2 * 3."""
        ctx = QuadraticContext.from_coefficients(2, 2)
        alpha = ctx.alpha()

        assert (ctx.D, ctx.sqrt_cofactor) == (3, 2)
        assert alpha * alpha == 2 * alpha + 2

    def test_rational_roots(self):
        """Test f = T**2 - 3T + 2 with roots 2 and 1."""
        ctx = QuadraticContext.from_coefficients(3, -2)

        assert ctx.alpha() == 2
        assert ctx.alpha(swap=True) == 1

    def test_alpha_coordinates(self):
        """Test that x = c + d*alpha is recovered."""
        ctx = QuadraticContext.from_coefficients(2, 2)
        x = ctx.field.from_sqrt(Fraction(1, 3), 5)

        c, d = ctx.alpha_coordinates(x)

        assert c + d * ctx.alpha() == x

    def test_double_root_rejected(self):
        """Test that a zero discriminant is rejected."""
        with pytest.raises(ValueError, match="double root"):
            QuadraticContext.from_coefficients(2, -1)
