# -*- coding: utf-8 -*-
"""
Sparse exact Clifford algebra Cl_m with every generator squaring to -1.

Blades are int bitmasks (bit k set means g_k is a factor, factors in
ascending order), so the generator count is unbounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from ..errors import DimensionMismatchError, IdentityDefect, IndexRangeError
from .octonion import to_fraction

Scalar = Union[int, Fraction]


def blade_mask(indices: Iterable[int]) -> int:
    mask = 0
    for k in indices:
        if k < 0:
            raise IndexRangeError(f"negative generator index {k}")
        if mask >> k & 1:
            raise IndexRangeError(f"repeated generator index {k} in blade")
        mask |= 1 << k
    return mask


def blade_indices(mask: int) -> List[int]:
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return out


def blade_sort_key(mask: int) -> Tuple[int, List[int]]:
    """Canonical term order: by cardinality, then lexicographic index list."""
    return (mask.bit_count(), blade_indices(mask))


def blade_product(a: int, b: int) -> Tuple[int, int]:
    """Return ``(sign, a ^ b)`` with ``g_A g_B = sign * g_{A Δ B}``."""
    # Pairs (i in A, j in B) with i > j each need one transposition.
    swaps = 0
    shifted = a >> 1
    while shifted:
        swaps += (shifted & b).bit_count()
        shifted >>= 1
    # Each shared generator contracts as g_k g_k = -1.
    swaps += (a & b).bit_count()
    return (-1 if swaps & 1 else 1), a ^ b


@dataclass(frozen=True, eq=False)
class Multivector:
    """Element of Cl_dim stored as ``{blade mask: coefficient}`` without zeros."""

    dim: int
    terms: Dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        limit = 1 << self.dim
        cleaned: Dict[int, Fraction] = {}
        for mask, coeff in self.terms.items():
            if mask < 0 or mask >= limit:
                raise IndexRangeError(f"blade {blade_indices(mask)} not in Cl_{self.dim}")
            value = to_fraction(coeff)
            if value:
                cleaned[mask] = value
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def zero(cls, dim: int) -> "Multivector":
        return cls(dim, {})

    @classmethod
    def scalar(cls, value: Scalar, dim: int) -> "Multivector":
        return cls(dim, {0: value})

    @classmethod
    def generator(cls, k: int, dim: int, coeff: Scalar = 1) -> "Multivector":
        if not 0 <= k < dim:
            raise IndexRangeError(f"generator g_{k} not in Cl_{dim}")
        return cls(dim, {1 << k: coeff})

    @classmethod
    def blade(cls, indices: Sequence[int], dim: int, coeff: Scalar = 1) -> "Multivector":
        """Product ``coeff * g_{i1} g_{i2} ...`` in the given (not necessarily sorted) order."""
        result = cls.scalar(coeff, dim)
        for k in indices:
            result = result * cls.generator(k, dim)
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self.terms.items())))

    def _check_dim(self, other: "Multivector") -> None:
        if self.dim != other.dim:
            raise DimensionMismatchError(f"Cl_{self.dim} and Cl_{other.dim} do not mix")

    def __add__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_dim(other)
        out = dict(self.terms)
        for mask, coeff in other.terms.items():
            out[mask] = out.get(mask, Fraction(0)) + coeff
        return Multivector(self.dim, out)

    def __neg__(self) -> "Multivector":
        return Multivector(self.dim, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Scalar) -> "Multivector":
        factor = to_fraction(factor)
        return Multivector(self.dim, {m: factor * c for m, c in self.terms.items()})

    def __mul__(self, other: Union["Multivector", Scalar]) -> "Multivector":
        if isinstance(other, Multivector):
            return mv_product(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Scalar) -> "Multivector":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def grade(self, k: int) -> "Multivector":
        return mv_grade(self, k)

    def scalar_part(self) -> Fraction:
        return self.terms.get(0, Fraction(0))

    def vector_coords(self) -> Tuple[Fraction, ...]:
        """Coordinates of a pure grade-1 element; anything else is a defect."""
        stray = [m for m in self.terms if m.bit_count() != 1]
        if stray:
            raise IdentityDefect(
                "grade-1 element",
                expected="vector",
                actual=[blade_indices(m) for m in stray],
            )
        coords = [Fraction(0)] * self.dim
        for mask, coeff in self.terms.items():
            coords[mask.bit_length() - 1] = coeff
        return tuple(coords)

    def sorted_terms(self) -> List[Tuple[int, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: blade_sort_key(item[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mask, coeff in self.sorted_terms():
            name = "".join(f"g{k}" for k in blade_indices(mask)) or "1"
            parts.append(f"{coeff}*{name}")
        return " + ".join(parts)


def mv_product(u: Multivector, v: Multivector) -> Multivector:
    if u.dim != v.dim:
        raise DimensionMismatchError(f"Cl_{u.dim} and Cl_{v.dim} do not mix")
    out: Dict[int, Fraction] = {}
    for a, x in u.terms.items():
        for b, y in v.terms.items():
            sign, c = blade_product(a, b)
            out[c] = out.get(c, Fraction(0)) + sign * x * y
    return Multivector(u.dim, out)


def mv_from_vector(coords: Sequence[Union[int, Fraction]]) -> Multivector:
    return Multivector(len(coords), {1 << k: c for k, c in enumerate(coords)})


def mv_grade(u: Multivector, k: int) -> Multivector:
    if not 0 <= k <= u.dim:
        raise IndexRangeError(f"grade {k} outside 0..{u.dim}")
    return Multivector(u.dim, {m: c for m, c in u.terms.items() if m.bit_count() == k})


def mv_anticommutator(u: Multivector, v: Multivector) -> Multivector:
    return mv_product(u, v) + mv_product(v, u)
