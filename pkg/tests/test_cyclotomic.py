"""Tests for cyclotomic field arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st, settings
from cyclotomic import (
    CycNum, ONE, ZERO, cyclotomic_modulus, root_of_unity,
    cyc_add, cyc_conj, cyc_inv, cyc_is_zero, cyc_mul, cyc_neg, cyc_sub
)


ORDERS = [1, 2, 3, 4, 5, 6, 8, 12]


@st.composite
def cyclotomic_numbers(draw, order=None):
    n = order if order is not None else draw(st.sampled_from(ORDERS))
    coeffs = draw(st.lists(
        st.fractions(min_value=-5, max_value=5, max_denominator=6),
        min_size=n, max_size=n,
    ))
    return CycNum.from_powers(n, coeffs)


class TestRootsOfUnity:
    """Tests for root_of_unity and canonical forms."""

    def test_zeta4_squared_is_minus_one(self):
        assert root_of_unity(1, 4) ** 2 == CycNum.rational(-1)

    def test_zeta3_plus_its_square(self):
        assert root_of_unity(1, 3) + root_of_unity(2, 3) == CycNum.rational(-1)

    def test_exponent_reduced_mod_order(self):
        assert root_of_unity(7, 3) == root_of_unity(1, 3)
        assert root_of_unity(-1, 3) == root_of_unity(2, 3)

    def test_order_one_is_one(self):
        assert root_of_unity(5, 1) == ONE

    def test_order_two_collapses_to_rational(self):
        value = root_of_unity(1, 2)
        assert value.is_rational()
        assert value.as_fraction() == -1

    def test_invalid_order(self):
        with pytest.raises(ValueError):
            root_of_unity(1, 0)

    @pytest.mark.parametrize("order", range(2, 13))
    def test_all_roots_sum_to_zero(self, order):
        for j in range(1, order):
            total = ZERO
            for k in range(order):
                total = total + root_of_unity(j * k, order)
            assert total.is_zero(), f"sum of zeta({order})^({j}k) is {total}"

    def test_root_power_sums_for_order_five(self):
        for j in range(1, 5):
            assert sum((root_of_unity(j * k, 5) for k in range(5)), ZERO) == ZERO
        assert sum((root_of_unity(0, 5) for _ in range(5)), ZERO) == 5

    def test_values_stored_at_smallest_order(self):
        zeta3 = root_of_unity(1, 3)
        assert root_of_unity(2, 6).order == 3
        assert root_of_unity(2, 6).coeffs == zeta3.coeffs
        assert root_of_unity(4, 12).order == 3
        assert root_of_unity(3, 12).order == 4
        assert root_of_unity(6, 12).is_rational()
        assert str(root_of_unity(2, 6)) == "zeta(3)"
        # zeta_6 = 1 + zeta_3; odd orders win over twice themselves
        assert root_of_unity(1, 6).order == 3
        assert str(root_of_unity(1, 6)) == "1 + zeta(3)"
        assert root_of_unity(1, 10).order == 5

    def test_arithmetic_results_are_canonical(self):
        zeta12 = root_of_unity(1, 12)
        fourth = zeta12 * zeta12 * zeta12 * zeta12
        assert fourth.order == 3
        assert str(fourth) == "zeta(3)"
        mixed = root_of_unity(1, 3) * root_of_unity(1, 4) * root_of_unity(3, 4)
        assert mixed.order == 3
        assert (root_of_unity(1, 12) - root_of_unity(1, 12)).order == 1

    def test_modulus_length_is_totient(self):
        assert len(cyclotomic_modulus(12)) == 4
        assert len(cyclotomic_modulus(7)) == 6
        # Phi_3 = x^2 + x + 1
        assert cyclotomic_modulus(3) == (1, 1)

    def test_mixed_orders_lift_to_lcm(self):
        value = root_of_unity(1, 3) * root_of_unity(1, 4)
        assert value == root_of_unity(7, 12)
        assert value.order == 12

    def test_equal_values_hash_alike(self):
        zeta3 = root_of_unity(1, 3)
        same = root_of_unity(2, 6) * 1
        assert zeta3 == same
        assert hash(zeta3) == hash(same)
        assert hash(CycNum.rational(Fraction(1, 2))) == hash(root_of_unity(1, 2) * Fraction(-1, 2))


class TestFieldOperations:
    """Tests for inversion, conjugation and the wrappers."""

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError, match="division by zero in cyclotomic field"):
            root_of_unity(1, 5).__truediv__(ZERO)
        with pytest.raises(ZeroDivisionError):
            cyc_inv(ZERO)

    def test_conjugate_of_root(self):
        assert root_of_unity(1, 5).conj() == root_of_unity(4, 5)
        assert cyc_conj(root_of_unity(1, 4)) == -root_of_unity(1, 4)

    def test_norm_and_trace(self):
        zeta3 = root_of_unity(1, 3)
        assert zeta3.norm() == 1
        assert zeta3.trace() == -1
        assert (1 - zeta3).norm() == 3

    def test_galois_needs_unit(self):
        with pytest.raises(ValueError):
            root_of_unity(1, 12).galois(2)

    def test_wrappers(self):
        a, b = root_of_unity(1, 3), CycNum.rational(2)
        assert cyc_add(a, b) == a + b
        assert cyc_sub(a, b) == a - b
        assert cyc_mul(a, b) == a * b
        assert cyc_neg(a) == -a
        assert cyc_is_zero(a - a)

    def test_printing(self):
        assert str(root_of_unity(1, 3)) == "zeta(3)"
        assert str(CycNum.rational(Fraction(1, 2)) + root_of_unity(1, 3)) == "1/2 + zeta(3)"
        assert str(root_of_unity(2, 5) * -2) == "-2*zeta(5)^2"
        assert str(ZERO) == "0"

    def test_mixing_with_plain_numbers(self):
        zeta = root_of_unity(1, 4)
        assert 1 - zeta == -(zeta - 1)
        assert (1 / zeta) * zeta == ONE
        assert zeta * Fraction(1, 2) * 2 == zeta


class TestFieldAxiomsProperty:
    """Property-based tests for the field structure.

    **Feature: relative-invariants, Property 1: Cyclotomic field axioms**
    """

    @given(cyclotomic_numbers(), cyclotomic_numbers(), cyclotomic_numbers())
    @settings(max_examples=100, deadline=None, derandomize=True)
    def test_ring_axioms(self, a, b, c):
        """
        **Feature: relative-invariants, Property 1: Cyclotomic field axioms**

        Addition and multiplication are associative and commutative, and
        multiplication distributes over addition, across mixed orders.
        """
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    @given(cyclotomic_numbers())
    @settings(max_examples=100, deadline=None, derandomize=True)
    def test_inverse(self, a):
        """
        **Feature: relative-invariants, Property 1: Cyclotomic field axioms**

        Every nonzero element times its inverse is 1.
        """
        if a.is_zero():
            return
        assert a * a.inv() == ONE

    @given(cyclotomic_numbers(), cyclotomic_numbers())
    @settings(max_examples=100, deadline=None, derandomize=True)
    def test_conjugation_is_an_involutive_automorphism(self, a, b):
        """
        **Feature: relative-invariants, Property 2: Conjugation**

        conj(conj(a)) == a and conj respects sums and products.
        """
        assert a.conj().conj() == a
        assert (a + b).conj() == a.conj() + b.conj()
        assert (a * b).conj() == a.conj() * b.conj()

    @given(cyclotomic_numbers(), cyclotomic_numbers())
    @settings(max_examples=100, deadline=None, derandomize=True)
    def test_equality_is_consistent_with_hash(self, a, b):
        """
        **Feature: relative-invariants, Property 1: Cyclotomic field axioms**

        a - b is zero exactly when a == b; equal values hash alike.
        """
        assert (a == b) == (a - b).is_zero()
        if a == b:
            assert hash(a) == hash(b)

    @given(cyclotomic_numbers())
    @settings(max_examples=100, deadline=None, derandomize=True)
    def test_canonical_form_ignores_the_route_taken(self, a):
        """
        **Feature: relative-invariants, Property 1: Cyclotomic field axioms**

        Passing through Q(zeta_12) and back yields the identical stored form.
        """
        detour = (a * root_of_unity(1, 12)) * root_of_unity(11, 12)
        assert detour.order == a.order
        assert detour.coeffs == a.coeffs
        assert str(detour) == str(a)
