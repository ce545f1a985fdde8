# -*- coding: utf-8 -*-

from __future__ import annotations

import random
import unittest
from fractions import Fraction

from octowitt.algebra.clifford import (
    Multivector,
    blade_indices,
    blade_mask,
    blade_product,
    mv_anticommutator,
    mv_from_vector,
    mv_grade,
    mv_product,
)
from octowitt.errors import DimensionMismatchError, IdentityDefect, IndexRangeError
from octowitt.verification import _oracle_blade_product


class TestBladeProduct(unittest.TestCase):
    def test_examples(self) -> None:
        self.assertEqual(blade_product(blade_mask([0]), blade_mask([1])), (1, blade_mask([0, 1])))
        self.assertEqual(blade_product(blade_mask([1]), blade_mask([0])), (-1, blade_mask([0, 1])))
        self.assertEqual(blade_product(blade_mask([3]), blade_mask([3])), (-1, 0))

    def test_agrees_with_bubble_sort_oracle(self) -> None:
        rng = random.Random(7)
        for dim in (8, 16, 24):
            for _ in range(200):
                a = sorted(rng.sample(range(dim), rng.randint(0, 6)))
                b = sorted(rng.sample(range(dim), rng.randint(0, 6)))
                self.assertEqual(
                    blade_product(blade_mask(a), blade_mask(b)),
                    _oracle_blade_product(a, b),
                    (a, b),
                )

    def test_repeated_index_rejected(self) -> None:
        with self.assertRaises(IndexRangeError):
            blade_mask([2, 2])

    def test_indices_round_trip(self) -> None:
        self.assertEqual(blade_indices(blade_mask([0, 5, 33])), [0, 5, 33])


class TestMultivector(unittest.TestCase):
    def test_generators_anticommute(self) -> None:
        for dim in (8, 24):
            for i in range(dim):
                for j in range(dim):
                    g_i = Multivector.generator(i, dim)
                    g_j = Multivector.generator(j, dim)
                    expected = Multivector.scalar(-2, dim) if i == j else Multivector.zero(dim)
                    self.assertEqual(mv_anticommutator(g_i, g_j), expected)

    def test_product_example(self) -> None:
        g0, g1 = Multivector.generator(0, 8), Multivector.generator(1, 8)
        self.assertEqual((g0 + g1) * (g0 - g1), Multivector.blade([0, 1], 8, -2))

    def test_unit(self) -> None:
        u = Multivector(8, {blade_mask([1, 4]): Fraction(3, 2), 0: 5})
        self.assertEqual(u * Multivector.scalar(1, 8), u)

    def test_associative_on_random_triples(self) -> None:
        rng = random.Random(11)
        for dim in (8, 16, 24):
            for _ in range(30):
                u, v, w = (
                    Multivector(
                        dim,
                        {
                            blade_mask(sorted(rng.sample(range(dim), rng.randint(0, 4)))): Fraction(
                                rng.randint(-9, 9), rng.randint(1, 9)
                            )
                            for _ in range(3)
                        },
                    )
                    for _ in range(3)
                )
                self.assertEqual(mv_product(mv_product(u, v), w), mv_product(u, mv_product(v, w)))

    def test_vector_square(self) -> None:
        coords = [Fraction(1, 2), 0, 3, 0, 0, -1, 0, 2]
        x = mv_from_vector(coords)
        self.assertEqual(x * x, Multivector.scalar(-sum(c * c for c in coords), 8))
        self.assertTrue(mv_from_vector([0] * 8).is_zero())

    def test_grades(self) -> None:
        u = Multivector.blade([0, 1], 8) + Multivector.generator(2, 8)
        self.assertEqual(mv_grade(u, 1), Multivector.generator(2, 8))
        self.assertEqual(mv_grade(Multivector.scalar(5, 8), 0), Multivector.scalar(5, 8))
        total = Multivector.zero(8)
        for k in range(9):
            total = total + mv_grade(u, k)
        self.assertEqual(total, u)
        with self.assertRaises(IndexRangeError):
            mv_grade(u, 9)

    def test_dimension_mismatch(self) -> None:
        with self.assertRaises(DimensionMismatchError):
            mv_product(Multivector.generator(0, 8), Multivector.generator(0, 16))

    def test_vector_coords_rejects_bivectors(self) -> None:
        with self.assertRaises(IdentityDefect):
            Multivector.blade([0, 1], 8).vector_coords()

    def test_canonical_term_order(self) -> None:
        u = Multivector(8, {blade_mask([0, 2]): 1, blade_mask([3]): 1, blade_mask([0, 1]): 1, 0: 1})
        self.assertEqual(
            [blade_indices(m) for m, _ in u.sorted_terms()],
            [[], [3], [0, 1], [0, 2]],
        )


if __name__ == "__main__":
    unittest.main()
