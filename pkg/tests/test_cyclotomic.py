"""Exact cyclotomic arithmetic: canonical forms, ring axioms, conjugation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dicysym.cyclotomic import (
    CyclotomicNumber,
    cyclo,
    cyclotomic_polynomial,
    euler_phi,
    root_of_unity,
)

ORDERS = [1, 2, 3, 4, 5, 6, 8, 12]


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


@st.composite
def cyclotomics(draw, orders=ORDERS):
    order = draw(st.sampled_from(orders))
    phi = euler_phi(order)
    coeffs = draw(st.lists(
        st.fractions(min_value=-4, max_value=4, max_denominator=6),
        min_size=phi, max_size=phi))
    return CyclotomicNumber(order, coeffs)


class TestCyclotomicPolynomial:
    def test_first_orders(self):
        assert cyclotomic_polynomial(1) == (-1, 1)
        assert cyclotomic_polynomial(2) == (1, 1)
        assert cyclotomic_polynomial(3) == (1, 1, 1)
        assert cyclotomic_polynomial(4) == (1, 0, 1)

    def test_order_twelve_against_expansion(self):
        # independent oracle: the product of Phi_d over all d | 12 must
        # expand to x^12 - 1
        assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
        product = [1]
        for d in (1, 2, 3, 4, 6, 12):
            product = _poly_mul(product, list(cyclotomic_polynomial(d)))
        expected = [0] * 13
        expected[0], expected[12] = -1, 1
        assert product == expected

    @pytest.mark.parametrize("n", ORDERS + [7, 9, 10, 15, 24, 30, 60])
    def test_degree_is_euler_phi(self, n):
        assert len(cyclotomic_polynomial(n)) == euler_phi(n) + 1


class TestRootsOfUnity:
    def test_minus_one(self):
        assert (1 + root_of_unity(2, 1)).is_zero()

    def test_i_squares_to_minus_one(self):
        i = root_of_unity(4, 1)
        assert i * i == -1

    def test_cube_roots_sum_to_zero(self):
        total = 1 + root_of_unity(3, 1) + root_of_unity(3, 2)
        assert total.is_zero()

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
    def test_prime_vanishing_sums(self, p):
        total = cyclo(0)
        for k in range(p):
            total = total + root_of_unity(p, k)
        assert total.is_zero()

    def test_exponent_reduced_mod_order(self):
        assert root_of_unity(6, 7) == root_of_unity(6, 1)
        assert root_of_unity(6, -1) == root_of_unity(6, 5)
        assert root_of_unity(5, 0) == 1

    def test_two_cosine_values(self):
        # zeta_4 + zeta_4^{-1} = 2 cos(pi/2) = 0
        assert (root_of_unity(4, 1) + root_of_unity(4, -1)).is_zero()
        # zeta_6 + zeta_6^{-1} = 2 cos(pi/3) = 1
        assert root_of_unity(6, 1) + root_of_unity(6, -1) == 1


class TestArithmetic:
    def test_i_times_minus_i(self):
        assert root_of_unity(4, 1) * root_of_unity(4, 3) == 1

    def test_cross_order_addition(self):
        # zeta_3 at order 3 plus zeta_6^2 at order 6 is 2*zeta_3
        a = root_of_unity(3, 1)
        b = root_of_unity(6, 2)
        assert a + b == a * 2

    def test_rational_scaling(self):
        x = root_of_unity(8, 3) * Fraction(2, 3)
        assert x / Fraction(2, 3) == root_of_unity(8, 3)

    def test_field_division_unsupported(self):
        with pytest.raises(TypeError):
            cyclo(1) / root_of_unity(4, 1)

    @settings(max_examples=150)
    @given(cyclotomics(), cyclotomics(), cyclotomics())
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert (a + b) * c == a * c + b * c

    @settings(max_examples=100)
    @given(cyclotomics())
    def test_additive_inverse(self, a):
        assert (a - a).is_zero()
        assert a + 0 == a
        assert a * 1 == a


class TestCanonicalForm:
    @settings(max_examples=100)
    @given(cyclotomics())
    def test_reduction_idempotent(self, a):
        assert a.reduced().reduced() == a.reduced()

    @settings(max_examples=100)
    @given(cyclotomics(), st.sampled_from([2, 3, 4]))
    def test_lifting_invariance(self, a, factor):
        lifted = a.lift(a.order * factor)
        assert lifted == a
        assert hash(lifted) == hash(a)

    def test_equality_is_canonical(self):
        # zeta_6 = 1 + zeta_3 across different orders
        assert root_of_unity(6, 1) == 1 + root_of_unity(3, 1)

    def test_zero_decided_exactly(self):
        x = root_of_unity(12, 4) + root_of_unity(12, 8) + 1  # vanishing sum
        assert x.is_zero()
        assert x == cyclo(0)

    def test_coefficient_length_invariant(self):
        for n in ORDERS:
            assert len(root_of_unity(n, 1).coeffs) == euler_phi(n)
        with pytest.raises(ValueError):
            CyclotomicNumber(4, [1])


class TestConjugation:
    def test_conjugate_of_i(self):
        assert root_of_unity(4, 1).conjugate() == root_of_unity(4, 3)

    @settings(max_examples=100)
    @given(cyclotomics())
    def test_involution(self, a):
        assert a.conjugate().conjugate() == a

    @settings(max_examples=100)
    @given(cyclotomics(), cyclotomics())
    def test_ring_homomorphism(self, a, b):
        assert (a + b).conjugate() == a.conjugate() + b.conjugate()
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()

    @settings(max_examples=60)
    @given(st.sampled_from(ORDERS), st.integers(min_value=-20, max_value=20))
    def test_unit_modulus(self, n, k):
        z = root_of_unity(n, k)
        assert z * z.conjugate() == 1


class TestComplexEmbedding:
    def test_one(self):
        assert root_of_unity(1, 0).to_complex() == 1 + 0j

    def test_i(self):
        assert abs(root_of_unity(4, 1).to_complex() - 1j) < 1e-12

    @settings(max_examples=100)
    @given(cyclotomics(), cyclotomics())
    def test_exact_zero_implies_tiny_float(self, a, b):
        diff = (a + b) - (b + a)
        assert diff.is_zero() and abs(diff.to_complex()) < 1e-9
        prod_diff = a * b - b * a
        assert prod_diff.is_zero() and abs(prod_diff.to_complex()) < 1e-9

    @settings(max_examples=60)
    @given(cyclotomics())
    def test_embedding_is_additive(self, a):
        assert abs((a + a).to_complex() - 2 * a.to_complex()) < 1e-9
