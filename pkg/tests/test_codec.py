# -*- coding: utf-8 -*-

from __future__ import annotations

import tempfile
import unittest
from fractions import Fraction
from pathlib import Path

from octowitt.algebra.clifford import Multivector, blade_mask
from octowitt.algebra.octonion import Octonion
from octowitt.algebra.tensor import MultiOctonion, MultiTensorElement, TensorElement
from octowitt.codec import (
    decode_coordinates,
    decode_multi_tensor,
    decode_multivector,
    decode_octonion,
    decode_polynomial,
    decode_rational,
    decode_tensor,
    encode_multi_tensor,
    encode_multivector,
    encode_octonion,
    encode_polynomial,
    encode_rational,
    encode_tensor,
    load_json_argument,
)
from octowitt.diffops import Polynomial
from octowitt.errors import CodecError


class TestRationals(unittest.TestCase):
    def test_encoding(self) -> None:
        self.assertEqual(encode_rational(Fraction(-3, 2)), "-3/2")
        self.assertEqual(encode_rational(Fraction(4, 2)), "2")
        self.assertEqual(encode_rational(0), "0")

    def test_decoding(self) -> None:
        self.assertEqual(decode_rational("−3/2"), Fraction(-3, 2))
        self.assertEqual(decode_rational(7), Fraction(7))
        self.assertEqual(decode_rational("6/4"), Fraction(3, 2))
        for bad in (1.5, True, "1/0", "abc", None):
            with self.assertRaises(CodecError):
                decode_rational(bad)


class TestValues(unittest.TestCase):
    def test_octonion(self) -> None:
        x = Octonion((1, Fraction(-1, 3), 0, 0, 0, 0, 0, 2))
        self.assertEqual(encode_octonion(x), ["1", "-1/3", "0", "0", "0", "0", "0", "2"])
        self.assertEqual(decode_octonion(encode_octonion(x)), x)
        with self.assertRaises(CodecError):
            decode_octonion(["1"] * 7)

    def test_multivector_canonical_order(self) -> None:
        u = Multivector(8, {blade_mask([0, 2]): 1, blade_mask([5]): Fraction(1, 2), 0: -1})
        payload = encode_multivector(u)
        self.assertEqual(
            payload,
            {
                "dim": 8,
                "terms": [
                    {"blade": [], "coeff": "-1"},
                    {"blade": [5], "coeff": "1/2"},
                    {"blade": [0, 2], "coeff": "1"},
                ],
            },
        )
        self.assertEqual(decode_multivector(payload), u)

    def test_multivector_errors(self) -> None:
        with self.assertRaises(CodecError):
            decode_multivector({"dim": 8, "terms": [{"blade": [9], "coeff": "1"}]})
        with self.assertRaises(CodecError):
            decode_multivector({"dim": 8, "terms": [{"blade": [2, 1], "coeff": "1"}]})
        with self.assertRaises(CodecError):
            decode_multivector({"terms": []})

    def test_tensor(self) -> None:
        t = TensorElement(8, {blade_mask([1, 3]): Octonion.basis(5, -2), 0: Octonion.scalar(1)})
        payload = encode_tensor(t)
        self.assertEqual(payload["terms"][0], {"blade": [], "oct": ["1", "0", "0", "0", "0", "0", "0", "0"]})
        self.assertEqual(decode_tensor(payload), t)

    def test_multi_tensor(self) -> None:
        t = MultiTensorElement(16, {blade_mask([9]): MultiOctonion.basis(1, 2, 2)}, 2)
        payload = encode_multi_tensor(t)
        self.assertEqual(len(payload["terms"][0]["slots"]), 2)
        self.assertEqual(decode_multi_tensor(payload), t)

    def test_polynomial(self) -> None:
        p = Polynomial.variable(0, 8) * Polynomial.variable(3, 8)
        payload = encode_polynomial(p)
        self.assertEqual(payload["nvars"], 8)
        self.assertEqual(payload["terms"][0]["exps"], [1, 0, 0, 1, 0, 0, 0, 0])
        self.assertEqual(decode_polynomial(payload), p)

    def test_polynomial_errors(self) -> None:
        with self.assertRaises(CodecError):
            decode_polynomial({"nvars": 8, "terms": [{"exps": [1], "coeff": {"dim": 8, "terms": []}}]})
        with self.assertRaises(CodecError):
            decode_polynomial({"nvars": 0, "terms": []})


class TestInputs(unittest.TestCase):
    def test_coordinates(self) -> None:
        self.assertEqual(decode_coordinates(["1/2", 3], 2), [Fraction(1, 2), Fraction(3)])
        with self.assertRaises(CodecError):
            decode_coordinates([1] * 7, 8)

    def test_inline_file_and_stdin(self) -> None:
        self.assertEqual(load_json_argument("[1, 2]"), [1, 2])
        self.assertEqual(load_json_argument("-", "[3]"), [3])
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "x.json"
            path.write_text('["1/2"]', encoding="utf-8")
            self.assertEqual(load_json_argument(str(path)), ["1/2"])
        with self.assertRaises(CodecError):
            load_json_argument("[1, 2")


if __name__ == "__main__":
    unittest.main()
