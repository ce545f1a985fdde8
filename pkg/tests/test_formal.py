# -*- coding: utf-8 -*-

from __future__ import annotations

import unittest

from octowitt.formal import (
    formal_hermitian_variables,
    formal_round_trip,
    formal_twistor_anticommutation,
    formal_twistor_vectors,
    hermitian_sign_table,
    twistor_sign_table,
    witt_sign_table,
    z0_matches_twistor_sum,
)
from octowitt.reference import (
    PRINTED_HERMITIAN_SIGNS,
    PRINTED_WITT_SIGNS,
    corrected_twistor_rows,
)


class TestFormalFrames(unittest.TestCase):
    def test_twistor_vectors_are_linear_forms(self) -> None:
        xs = formal_twistor_vectors()
        for x in xs:
            self.assertEqual(x.degree(), 1)
            self.assertEqual(len(x.terms), 8)

    def test_anticommutation_holds_symbolically(self) -> None:
        self.assertEqual(formal_twistor_anticommutation(), [])
        self.assertEqual(formal_twistor_anticommutation(1, 2), [])

    def test_round_trip(self) -> None:
        self.assertEqual(formal_round_trip(), [])
        self.assertEqual(formal_round_trip(0, 2), [])

    def test_z0_structure(self) -> None:
        self.assertTrue(z0_matches_twistor_sum())
        self.assertTrue(z0_matches_twistor_sum(1, 2))

    def test_hermitian_variables_have_sixty_four_terms(self) -> None:
        for z in formal_hermitian_variables():
            self.assertEqual(len(z.terms), 8)
            for coeff in z.terms.values():
                self.assertEqual(len(coeff.terms), 8)


class TestSignTables(unittest.TestCase):
    def test_witt(self) -> None:
        self.assertEqual(witt_sign_table(), PRINTED_WITT_SIGNS)

    def test_twistor_matches_corrected_printing(self) -> None:
        self.assertEqual(twistor_sign_table(), corrected_twistor_rows())

    def test_twistor_rows_are_signed_permutations(self) -> None:
        for row in twistor_sign_table():
            self.assertEqual(sorted(var for _, var in row), list(range(8)))

    def test_hermitian(self) -> None:
        self.assertEqual(hermitian_sign_table(), PRINTED_HERMITIAN_SIGNS)
        self.assertEqual(hermitian_sign_table(1, 2), PRINTED_HERMITIAN_SIGNS)


if __name__ == "__main__":
    unittest.main()
