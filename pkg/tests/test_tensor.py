# -*- coding: utf-8 -*-

from __future__ import annotations

import unittest
from fractions import Fraction

from octowitt.algebra.clifford import Multivector, blade_mask
from octowitt.algebra.octonion import Octonion, oct_mul
from octowitt.algebra.tensor import (
    MultiOctonion,
    MultiTensorElement,
    TensorElement,
    embed_vector,
    multi_embed,
    multi_oct_left_mul,
    multi_tens_product,
    oct_left_mul,
    tens_product,
)
from octowitt.errors import DimensionMismatchError


class TestTensorProduct(unittest.TestCase):
    def test_factorwise_example(self) -> None:
        lhs = TensorElement.term(1, [0], 8)
        rhs = TensorElement.term(2, [1], 8)
        self.assertEqual(tens_product(lhs, rhs), TensorElement.term(3, [0, 1], 8))

    def test_unit_is_two_sided(self) -> None:
        unit = TensorElement.from_octonion(Octonion.scalar(1), 8)
        t = TensorElement(8, {blade_mask([2, 5]): Octonion((1, 0, 2, 0, 0, -1, 0, Fraction(1, 3)))})
        self.assertEqual(tens_product(unit, t), t)
        self.assertEqual(tens_product(t, unit), t)

    def test_inherits_non_associativity(self) -> None:
        e1, e2, e4 = (TensorElement.from_octonion(Octonion.basis(i), 8) for i in (1, 2, 4))
        self.assertNotEqual(
            tens_product(tens_product(e1, e2), e4),
            tens_product(e1, tens_product(e2, e4)),
        )

    def test_octonion_factor_reproduces_oct_mul(self) -> None:
        for a in range(8):
            for b in range(8):
                e_a, e_b = Octonion.basis(a), Octonion.basis(b)
                self.assertEqual(
                    tens_product(TensorElement.from_octonion(e_a, 8), TensorElement.from_octonion(e_b, 8)),
                    TensorElement.from_octonion(oct_mul(e_a, e_b), 8),
                )

    def test_dimension_mismatch(self) -> None:
        with self.assertRaises(DimensionMismatchError):
            tens_product(TensorElement.zero(8), TensorElement.zero(16))


class TestEmbeddingAndLeftMultiplication(unittest.TestCase):
    def test_embed_vector(self) -> None:
        coords = [1] + [0] * 7
        self.assertEqual(embed_vector(coords), TensorElement.from_multivector(Multivector.generator(0, 8)))
        self.assertTrue(embed_vector([0] * 8).is_zero())

    def test_embedded_square(self) -> None:
        coords = [1, 2, 0, 0, Fraction(1, 2), 0, 0, -1]
        x = embed_vector(coords)
        norm2 = sum(Fraction(c) ** 2 for c in coords)
        self.assertEqual(tens_product(x, x), TensorElement.from_octonion(Octonion.scalar(-norm2), 8))

    def test_oct_left_mul(self) -> None:
        t = TensorElement.term(1, [5], 8)
        self.assertEqual(oct_left_mul(Octonion.basis(1), t), TensorElement.term(0, [5], 8, -1))
        self.assertEqual(oct_left_mul(Octonion.basis(0), t), t)
        self.assertEqual(
            oct_left_mul(Octonion.basis(1), TensorElement.term(2, [0], 8)),
            TensorElement.term(3, [0], 8),
        )

    def test_octonion_components(self) -> None:
        t = TensorElement.term(3, [1], 8) + TensorElement.term(0, [], 8, 2)
        parts = t.octonion_components()
        self.assertEqual(parts[3], Multivector.generator(1, 8))
        self.assertEqual(parts[0], Multivector.scalar(2, 8))
        self.assertTrue(parts[5].is_zero())


class TestMultiTensor(unittest.TestCase):
    def test_slotwise_product(self) -> None:
        n = 2
        lhs = MultiTensorElement(16, {1 << 8: MultiOctonion.basis(1, 1, n)}, n)
        rhs = MultiTensorElement(16, {1 << 9: MultiOctonion.basis(1, 2, n)}, n)
        expected = MultiTensorElement(16, {blade_mask([8, 9]): MultiOctonion.basis(1, 3, n)}, n)
        self.assertEqual(multi_tens_product(lhs, rhs), expected)

    def test_cross_slot_product_vanishes(self) -> None:
        n = 2
        lhs = MultiTensorElement.from_multi_octonion(MultiOctonion.basis(0, 1, n))
        rhs = MultiTensorElement.from_multi_octonion(MultiOctonion.basis(1, 1, n))
        self.assertTrue(multi_tens_product(lhs, rhs).is_zero())

    def test_unit_acts_as_identity(self) -> None:
        n = 3
        unit = MultiTensorElement.from_multi_octonion(MultiOctonion.unit(n))
        probe = MultiTensorElement(24, {blade_mask([0, 17]): MultiOctonion.basis(2, 6, n, 5)}, n)
        self.assertEqual(multi_tens_product(unit, probe), probe)

    def test_multi_embed_places_blocks_in_slots(self) -> None:
        coords = list(range(16))
        embedded = multi_embed(coords, 2)
        self.assertEqual(embedded.slot(0), embed_vector(coords[:8] + [0] * 8))
        self.assertEqual(embedded.slot(1), embed_vector([0] * 8 + coords[8:]))
        self.assertEqual(embedded.collapse(), embed_vector(coords))

    def test_multi_left_mul_by_octonion(self) -> None:
        t = MultiTensorElement.from_multi_octonion(MultiOctonion.basis(1, 2, 2))
        self.assertEqual(
            multi_oct_left_mul(Octonion.basis(1), t),
            MultiTensorElement.from_multi_octonion(MultiOctonion.basis(1, 3, 2)),
        )

    def test_mismatched_slots_rejected(self) -> None:
        with self.assertRaises(DimensionMismatchError):
            MultiTensorElement(16, {0: MultiOctonion.unit(3)}, 2)
        with self.assertRaises(DimensionMismatchError):
            MultiTensorElement(12, {}, 2)


if __name__ == "__main__":
    unittest.main()
