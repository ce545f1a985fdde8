# -*- coding: utf-8 -*-
"""
JSON encoding of the algebra values.

Rationals travel as strings ``"num/den"`` in lowest terms (integers without
``/1``). Multivector and tensor terms are emitted in canonical blade order:
by cardinality, then by index list.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Sequence, Union

from .algebra.clifford import Multivector, blade_indices, blade_mask, blade_sort_key
from .algebra.octonion import Octonion
from .algebra.tensor import MultiOctonion, MultiTensorElement, TensorElement
from .diffops import Polynomial
from .errors import CodecError, OctowittError

Rational = Union[int, Fraction]


def encode_rational(value: Rational) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def decode_rational(raw: Any) -> Fraction:
    if isinstance(raw, bool):
        raise CodecError(f"not a rational: {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw.strip().replace("−", "-"))
        except (ValueError, ZeroDivisionError) as exc:
            raise CodecError(f"not a rational: {raw!r}") from exc
    # Floats are rejected; every coefficient must be exact.
    raise CodecError(f"not an exact rational: {raw!r}")


def _require(payload: Any, kind: type, what: str) -> Any:
    if not isinstance(payload, kind):
        raise CodecError(f"{what} must be a JSON {kind.__name__}, got {type(payload).__name__}")
    return payload


def _field(payload: Dict[str, Any], key: str, what: str) -> Any:
    if key not in payload:
        raise CodecError(f"{what} is missing {key!r}")
    return payload[key]


def _dim(payload: Dict[str, Any], what: str) -> int:
    dim = _field(payload, "dim", what)
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise CodecError(f"{what} dim must be a non-negative integer, got {dim!r}")
    return dim


def _blade(raw: Any) -> int:
    indices = _require(raw, list, "blade")
    if any(not isinstance(k, int) or isinstance(k, bool) for k in indices):
        raise CodecError(f"blade indices must be integers: {raw!r}")
    if indices != sorted(indices):
        raise CodecError(f"blade indices must be ascending: {raw!r}")
    try:
        return blade_mask(indices)
    except OctowittError as exc:
        raise CodecError(str(exc)) from exc


def encode_octonion(value: Octonion) -> List[str]:
    return [encode_rational(c) for c in value.coeffs]


def decode_octonion(raw: Any) -> Octonion:
    values = _require(raw, list, "octonion")
    if len(values) != 8:
        raise CodecError(f"an octonion has 8 coefficients, got {len(values)}")
    return Octonion(tuple(decode_rational(v) for v in values))


def encode_multivector(value: Multivector) -> Dict[str, Any]:
    return {
        "dim": value.dim,
        "terms": [
            {"blade": blade_indices(mask), "coeff": encode_rational(coeff)}
            for mask, coeff in value.sorted_terms()
        ],
    }


def decode_multivector(raw: Any) -> Multivector:
    payload = _require(raw, dict, "multivector")
    dim = _dim(payload, "multivector")
    terms: Dict[int, Fraction] = {}
    for term in _require(_field(payload, "terms", "multivector"), list, "terms"):
        term = _require(term, dict, "term")
        mask = _blade(_field(term, "blade", "term"))
        terms[mask] = terms.get(mask, Fraction(0)) + decode_rational(_field(term, "coeff", "term"))
    try:
        return Multivector(dim, terms)
    except OctowittError as exc:
        raise CodecError(str(exc)) from exc


def encode_tensor(value: TensorElement) -> Dict[str, Any]:
    return {
        "dim": value.dim,
        "terms": [
            {"blade": blade_indices(mask), "oct": encode_octonion(coeff)}
            for mask, coeff in sorted(value.terms.items(), key=lambda item: blade_sort_key(item[0]))
        ],
    }


def decode_tensor(raw: Any) -> TensorElement:
    payload = _require(raw, dict, "tensor element")
    dim = _dim(payload, "tensor element")
    terms: Dict[int, Octonion] = {}
    for term in _require(_field(payload, "terms", "tensor element"), list, "terms"):
        term = _require(term, dict, "term")
        mask = _blade(_field(term, "blade", "term"))
        coeff = decode_octonion(_field(term, "oct", "term"))
        terms[mask] = terms[mask] + coeff if mask in terms else coeff
    try:
        return TensorElement(dim, terms)
    except OctowittError as exc:
        raise CodecError(str(exc)) from exc


def encode_multi_tensor(value: MultiTensorElement) -> Dict[str, Any]:
    return {
        "dim": value.dim,
        "n": value.n,
        "terms": [
            {"blade": blade_indices(mask), "slots": [encode_octonion(s) for s in coeff.slots]}
            for mask, coeff in sorted(value.terms.items(), key=lambda item: blade_sort_key(item[0]))
        ],
    }


def decode_multi_tensor(raw: Any) -> MultiTensorElement:
    payload = _require(raw, dict, "multi tensor element")
    dim = _dim(payload, "multi tensor element")
    if dim % 8 or dim == 0:
        raise CodecError(f"multi tensor dim must be a positive multiple of 8, got {dim}")
    n = payload.get("n", dim // 8)
    terms: Dict[int, MultiOctonion] = {}
    for term in _require(_field(payload, "terms", "multi tensor element"), list, "terms"):
        term = _require(term, dict, "term")
        mask = _blade(_field(term, "blade", "term"))
        slots = _require(_field(term, "slots", "term"), list, "slots")
        if len(slots) != n:
            raise CodecError(f"expected {n} slots, got {len(slots)}")
        coeff = MultiOctonion(tuple(decode_octonion(s) for s in slots))
        terms[mask] = terms[mask] + coeff if mask in terms else coeff
    try:
        return MultiTensorElement(dim, terms, n)
    except OctowittError as exc:
        raise CodecError(str(exc)) from exc


def encode_element(value: Union[TensorElement, MultiTensorElement]) -> Dict[str, Any]:
    if isinstance(value, MultiTensorElement):
        return encode_multi_tensor(value)
    return encode_tensor(value)


def encode_polynomial(value: Polynomial) -> Dict[str, Any]:
    return {
        "nvars": value.nvars,
        "terms": [
            {"exps": list(exps), "coeff": encode_tensor(coeff)} for exps, coeff in value.sorted_terms()
        ],
    }


def decode_polynomial(raw: Any) -> Polynomial:
    payload = _require(raw, dict, "polynomial")
    nvars = _field(payload, "nvars", "polynomial")
    if not isinstance(nvars, int) or isinstance(nvars, bool) or nvars <= 0:
        raise CodecError(f"nvars must be a positive integer, got {nvars!r}")
    terms: Dict[tuple, TensorElement] = {}
    for term in _require(_field(payload, "terms", "polynomial"), list, "terms"):
        term = _require(term, dict, "term")
        exps = _require(_field(term, "exps", "term"), list, "exps")
        if any(not isinstance(e, int) or isinstance(e, bool) for e in exps):
            raise CodecError(f"exponents must be integers: {exps!r}")
        coeff = decode_tensor(_field(term, "coeff", "term"))
        key = tuple(exps)
        terms[key] = terms[key] + coeff if key in terms else coeff
    try:
        return Polynomial(nvars, terms, next(iter(terms.values())).dim if terms else None)
    except OctowittError as exc:
        raise CodecError(str(exc)) from exc


def decode_coordinates(raw: Any, expected: int) -> List[Fraction]:
    values = _require(raw, list, "coordinates")
    if len(values) != expected:
        raise CodecError(f"expected {expected} coordinates, got {len(values)}")
    return [decode_rational(v) for v in values]


def load_json_argument(source: str, stdin_text: str = "") -> Any:
    """Parse ``source`` as a file path, ``-`` (stdin text) or inline JSON."""
    if source == "-":
        text = stdin_text
    else:
        path = Path(source)
        try:
            is_file = path.is_file()
        except OSError:
            is_file = False
        text = path.read_text(encoding="utf-8") if is_file else source
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodecError(f"invalid JSON input: {exc.msg} at position {exc.pos}") from exc


def dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=False, ensure_ascii=False)


def encode_matrix(rows: Sequence[Sequence[Rational]]) -> List[List[str]]:
    return [[encode_rational(v) for v in row] for row in rows]
