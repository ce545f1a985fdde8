# -*- coding: utf-8 -*-
"""
Exact octonion arithmetic.

The product of basis elements is read off the seven oriented triples of the
3-form ``φ = e¹²³ + e¹⁴⁵ + e¹⁷⁶ + e²⁵⁷ + e²⁴⁶ + e³⁴⁷ + e³⁶⁵``: a triple
``(a, b, c)`` means ``e_a e_b = e_c`` together with its cyclic shifts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from ..errors import DimensionMismatchError, IndexRangeError

Scalar = Union[int, Fraction]

FANO_TRIPLES: Tuple[Tuple[int, int, int], ...] = (
    (1, 2, 3),
    (1, 4, 5),
    (1, 7, 6),
    (2, 5, 7),
    (2, 4, 6),
    (3, 4, 7),
    (3, 6, 5),
)


def _build_mul_table() -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    table: List[List[Tuple[int, int]]] = [[(0, 0)] * 8 for _ in range(8)]
    for i in range(8):
        table[0][i] = (1, i)
        table[i][0] = (1, i)
    for i in range(1, 8):
        table[i][i] = (-1, 0)
    for a, b, c in FANO_TRIPLES:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            table[x][y] = (1, z)
            table[y][x] = (-1, z)
    return tuple(tuple(row) for row in table)


_MUL_TABLE = _build_mul_table()


def basis_mul(i: int, j: int) -> Tuple[int, int]:
    """Return ``(sign, k)`` with ``e_i e_j = sign * e_k``."""
    if not (0 <= i < 8 and 0 <= j < 8):
        raise IndexRangeError(f"octonion basis index out of range: ({i}, {j})")
    return _MUL_TABLE[i][j]


def to_fraction(value: Union[int, str, Fraction]) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


@dataclass(frozen=True)
class Octonion:
    """An octonion ``Σ coeffs[i] e_i`` with exact rational coefficients."""

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(to_fraction(c) for c in self.coeffs)
        if len(coeffs) != 8:
            raise DimensionMismatchError(f"an octonion has 8 coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls) -> "Octonion":
        return cls((0,) * 8)

    @classmethod
    def scalar(cls, value: Scalar) -> "Octonion":
        return cls((value,) + (0,) * 7)

    @classmethod
    def basis(cls, i: int, coeff: Scalar = 1) -> "Octonion":
        if not 0 <= i < 8:
            raise IndexRangeError(f"octonion basis index out of range: {i}")
        values: List[Scalar] = [0] * 8
        values[i] = coeff
        return cls(tuple(values))

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_real(self) -> bool:
        return not any(self.coeffs[1:])

    def support(self) -> List[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    def __add__(self, other: "Octonion") -> "Octonion":
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Octonion") -> "Octonion":
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Octonion":
        return Octonion(tuple(-a for a in self.coeffs))

    def scale(self, factor: Scalar) -> "Octonion":
        factor = to_fraction(factor)
        return Octonion(tuple(factor * a for a in self.coeffs))

    def __mul__(self, other: Union["Octonion", Scalar]) -> "Octonion":
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Scalar) -> "Octonion":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def conj(self) -> "Octonion":
        return oct_conj(self)

    def norm2(self) -> Fraction:
        return sum((c * c for c in self.coeffs), Fraction(0))

    def real_part(self) -> Fraction:
        return self.coeffs[0]

    def inverse(self) -> "Octonion":
        n2 = self.norm2()
        if n2 == 0:
            raise ZeroDivisionError("zero octonion has no inverse")
        return self.conj().scale(1 / n2)

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = f"e{i}" if mag == 1 else f"{mag}*e{i}"
            parts.append(f"{sign} {body}")
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def oct_mul(a: Octonion, b: Octonion) -> Octonion:
    out = [Fraction(0)] * 8
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        row = _MUL_TABLE[i]
        for j, y in enumerate(b.coeffs):
            if not y:
                continue
            sign, k = row[j]
            out[k] += sign * x * y
    return Octonion(tuple(out))


def oct_conj(a: Octonion) -> Octonion:
    c = a.coeffs
    return Octonion((c[0],) + tuple(-x for x in c[1:]))


def oct_inner(p: Octonion, q: Octonion) -> Fraction:
    """``(p, q) = Re(p̄ q)``, which equals the coordinate dot product."""
    return oct_mul(oct_conj(p), q).real_part()


def associator(a: Octonion, b: Octonion, c: Octonion) -> Octonion:
    return oct_mul(oct_mul(a, b), c) - oct_mul(a, oct_mul(b, c))


def phi_map(coords: Sequence[Union[int, Fraction]]) -> Octonion:
    """The isometry Φ: ℝ⁸ → 𝕆, ``Σ x_i g_i ↦ Σ x_i e_i``."""
    if len(coords) != 8:
        raise DimensionMismatchError(f"Φ expects 8 coordinates, got {len(coords)}")
    return Octonion(tuple(coords))


def phi_inverse(value: Octonion) -> Tuple[Fraction, ...]:
    return value.coeffs
