# -*- coding: utf-8 -*-

from __future__ import annotations

import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from octowitt.algebra.octonion import (
    FANO_TRIPLES,
    Octonion,
    associator,
    basis_mul,
    oct_conj,
    oct_inner,
    oct_mul,
    phi_inverse,
    phi_map,
)
from octowitt.errors import DimensionMismatchError, IndexRangeError

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
octonions = st.lists(rationals, min_size=8, max_size=8).map(lambda c: Octonion(tuple(c)))


class TestBasisProducts(unittest.TestCase):
    def test_fano_triples_and_cyclic_shifts(self) -> None:
        for a, b, c in FANO_TRIPLES:
            self.assertEqual(basis_mul(a, b), (1, c))
            self.assertEqual(basis_mul(b, c), (1, a))
            self.assertEqual(basis_mul(c, a), (1, b))
            self.assertEqual(basis_mul(b, a), (-1, c))

    def test_examples(self) -> None:
        self.assertEqual(basis_mul(1, 2), (1, 3))
        self.assertEqual(basis_mul(2, 1), (-1, 3))
        self.assertEqual(basis_mul(5, 5), (-1, 0))
        self.assertEqual(basis_mul(1, 7), (1, 6))
        self.assertEqual(basis_mul(3, 6), (1, 5))

    def test_every_product_is_a_signed_basis_element(self) -> None:
        for i in range(8):
            for j in range(8):
                sign, k = basis_mul(i, j)
                self.assertIn(sign, (1, -1))
                self.assertTrue(0 <= k < 8)

    def test_out_of_range(self) -> None:
        with self.assertRaises(IndexRangeError):
            basis_mul(8, 0)
        with self.assertRaises(IndexRangeError):
            Octonion.basis(-1)


class TestOctonion(unittest.TestCase):
    def test_requires_eight_coefficients(self) -> None:
        with self.assertRaises(DimensionMismatchError):
            Octonion((1, 2, 3))

    def test_non_associative_witness(self) -> None:
        e1, e2, e4 = Octonion.basis(1), Octonion.basis(2), Octonion.basis(4)
        left = oct_mul(oct_mul(e1, e2), e4)
        right = oct_mul(e1, oct_mul(e2, e4))
        self.assertEqual(left, Octonion.basis(7))
        self.assertEqual(right, Octonion.basis(7, -1))
        self.assertFalse(associator(e1, e2, e4).is_zero())

    def test_conjugate_and_norm(self) -> None:
        x = Octonion((1, 2, 0, 0, 0, 0, 0, -3))
        self.assertEqual(oct_conj(x), Octonion((1, -2, 0, 0, 0, 0, 0, 3)))
        self.assertEqual(x.norm2(), 14)
        self.assertEqual(oct_mul(x, oct_conj(x)), Octonion.scalar(14))

    def test_inverse(self) -> None:
        x = Octonion((Fraction(1, 2), 0, 3, 0, 0, -1, 0, 0))
        self.assertEqual(oct_mul(x, x.inverse()), Octonion.scalar(1))
        with self.assertRaises(ZeroDivisionError):
            Octonion.zero().inverse()

    def test_inner_product_is_coordinate_dot(self) -> None:
        p = Octonion((1, 2, 3, 4, 5, 6, 7, 8))
        q = Octonion((8, 7, 6, 5, 4, 3, 2, 1))
        self.assertEqual(oct_inner(p, q), sum(a * b for a, b in zip(p.coeffs, q.coeffs)))

    def test_phi_round_trip(self) -> None:
        coords = tuple(Fraction(k, 3) for k in range(8))
        self.assertEqual(phi_inverse(phi_map(coords)), coords)
        with self.assertRaises(DimensionMismatchError):
            phi_map([1, 2])

    def test_str(self) -> None:
        self.assertEqual(str(Octonion.zero()), "0")
        self.assertEqual(str(Octonion((1, 0, -1, 0, 0, 0, 0, 0))), "e0 - e2")


class TestOctonionProperties(unittest.TestCase):
    @settings(max_examples=1000, deadline=None)
    @given(octonions, octonions)
    def test_alternative(self, a: Octonion, b: Octonion) -> None:
        self.assertTrue(associator(a, a, b).is_zero())
        self.assertTrue(associator(a, b, b).is_zero())

    @settings(max_examples=50, deadline=None)
    @given(octonions, octonions)
    def test_norm_is_multiplicative(self, a: Octonion, b: Octonion) -> None:
        self.assertEqual(oct_mul(a, b).norm2(), a.norm2() * b.norm2())

    @settings(max_examples=50, deadline=None)
    @given(octonions, octonions)
    def test_conjugation_reverses_products(self, a: Octonion, b: Octonion) -> None:
        self.assertEqual(oct_conj(oct_mul(a, b)), oct_mul(oct_conj(b), oct_conj(a)))


if __name__ == "__main__":
    unittest.main()
