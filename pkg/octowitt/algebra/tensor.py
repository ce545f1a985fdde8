# -*- coding: utf-8 -*-
"""
The tensor algebras 𝕆⊗Cl_m and 𝕆ⁿ⊗Cl_{8n}.

Elements are sparse maps from Clifford blades to octonion (or n-tuple of
octonion) coefficients. The product is factorwise,
``(a⊗g_A)(b⊗g_B) = (ab)⊗(g_A g_B)``, so it inherits the non-associativity of
the octonion factor. The product on 𝕆ⁿ is slotwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Generic, List, Sequence, Tuple, TypeVar, Union

from ..errors import DimensionMismatchError, IndexRangeError
from .clifford import Multivector, blade_indices, blade_product, blade_sort_key
from .octonion import Octonion, oct_mul, to_fraction

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class MultiOctonion:
    """An element ``(o_0, ..., o_{n-1})`` of 𝕆ⁿ."""

    slots: Tuple[Octonion, ...]

    def __post_init__(self) -> None:
        slots = tuple(self.slots)
        if not slots:
            raise DimensionMismatchError("𝕆ⁿ needs at least one slot")
        object.__setattr__(self, "slots", slots)

    @property
    def n(self) -> int:
        return len(self.slots)

    @classmethod
    def zero(cls, n: int) -> "MultiOctonion":
        return cls(tuple(Octonion.zero() for _ in range(n)))

    @classmethod
    def unit(cls, n: int) -> "MultiOctonion":
        return cls(tuple(Octonion.basis(0) for _ in range(n)))

    @classmethod
    def basis(cls, k: int, i: int, n: int, coeff: Scalar = 1) -> "MultiOctonion":
        """``e_i^k``: the basis octonion e_i placed in slot k."""
        if not 0 <= k < n:
            raise IndexRangeError(f"slot {k} outside 0..{n - 1}")
        return cls.in_slot(k, Octonion.basis(i, coeff), n)

    @classmethod
    def in_slot(cls, k: int, value: Octonion, n: int) -> "MultiOctonion":
        if not 0 <= k < n:
            raise IndexRangeError(f"slot {k} outside 0..{n - 1}")
        return cls(tuple(value if s == k else Octonion.zero() for s in range(n)))

    def _check(self, other: "MultiOctonion") -> None:
        if self.n != other.n:
            raise DimensionMismatchError(f"𝕆^{self.n} and 𝕆^{other.n} do not mix")

    def is_zero(self) -> bool:
        return all(s.is_zero() for s in self.slots)

    def is_real(self) -> bool:
        return all(s.is_real() for s in self.slots)

    def map(self, fn: Callable[[Octonion], Octonion]) -> "MultiOctonion":
        return MultiOctonion(tuple(fn(s) for s in self.slots))

    def __add__(self, other: "MultiOctonion") -> "MultiOctonion":
        self._check(other)
        return MultiOctonion(tuple(a + b for a, b in zip(self.slots, other.slots)))

    def __sub__(self, other: "MultiOctonion") -> "MultiOctonion":
        self._check(other)
        return MultiOctonion(tuple(a - b for a, b in zip(self.slots, other.slots)))

    def __neg__(self) -> "MultiOctonion":
        return self.map(lambda s: -s)

    def scale(self, factor: Scalar) -> "MultiOctonion":
        factor = to_fraction(factor)
        return self.map(lambda s: s.scale(factor))

    def __mul__(self, other: "MultiOctonion") -> "MultiOctonion":
        if not isinstance(other, MultiOctonion):
            return NotImplemented
        self._check(other)
        return MultiOctonion(tuple(oct_mul(a, b) for a, b in zip(self.slots, other.slots)))

    def total(self) -> Octonion:
        out = Octonion.zero()
        for s in self.slots:
            out = out + s
        return out


Coeff = TypeVar("Coeff", Octonion, MultiOctonion)
T = TypeVar("T", bound="_BladeMap")


@dataclass(frozen=True, eq=False)
class _BladeMap(Generic[Coeff]):
    """Shared sparse storage ``{blade mask: coefficient}`` with zero pruning."""

    dim: int
    terms: Dict[int, Coeff] = field(default_factory=dict)

    def __post_init__(self) -> None:
        limit = 1 << self.dim
        cleaned: Dict[int, Coeff] = {}
        for mask, coeff in self.terms.items():
            if mask < 0 or mask >= limit:
                raise IndexRangeError(f"blade {blade_indices(mask)} not in Cl_{self.dim}")
            self._check_coeff(coeff)
            if not coeff.is_zero():
                cleaned[mask] = coeff
        object.__setattr__(self, "terms", cleaned)

    def _check_coeff(self, coeff: Coeff) -> None:
        pass

    def _new(self: T, terms: Dict[int, Coeff]) -> T:
        raise NotImplementedError

    def _zero_coeff(self) -> Coeff:
        raise NotImplementedError

    def _check_same(self: T, other: T) -> None:
        if type(self) is not type(other) or self.dim != other.dim:
            raise DimensionMismatchError(
                f"cannot combine {type(self).__name__}(dim={self.dim}) with "
                f"{type(other).__name__}(dim={other.dim})"
            )

    def is_zero(self) -> bool:
        return not self.terms

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.terms.values())

    def __eq__(self, other: object) -> bool:
        if type(self) is not type(other):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.dim, frozenset(self.terms.items())))

    def __add__(self: T, other: T) -> T:
        if not isinstance(other, _BladeMap):
            return NotImplemented
        self._check_same(other)
        out = dict(self.terms)
        for mask, coeff in other.terms.items():
            out[mask] = out[mask] + coeff if mask in out else coeff
        return self._new(out)

    def __neg__(self: T) -> T:
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self: T, other: T) -> T:
        if not isinstance(other, _BladeMap):
            return NotImplemented
        return self + (-other)

    def scale(self: T, factor: Scalar) -> T:
        factor = to_fraction(factor)
        return self._new({m: c.scale(factor) for m, c in self.terms.items()})

    def map_coefficients(self: T, fn: Callable[[Coeff], Coeff]) -> T:
        return self._new({m: fn(c) for m, c in self.terms.items()})

    def product(self: T, other: T) -> T:
        self._check_same(other)
        out: Dict[int, Coeff] = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                sign, c = blade_product(a, b)
                term = x * y
                if sign < 0:
                    term = -term
                out[c] = out[c] + term if c in out else term
        return self._new(out)

    def __mul__(self: T, other: Union[T, Scalar]) -> T:
        if isinstance(other, _BladeMap):
            return self.product(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self: T, other: Scalar) -> T:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def coefficient(self, mask: int) -> Coeff:
        return self.terms.get(mask, self._zero_coeff())

    def sorted_terms(self) -> List[Tuple[int, Coeff]]:
        return sorted(self.terms.items(), key=lambda item: blade_sort_key(item[0]))


@dataclass(frozen=True, eq=False)
class TensorElement(_BladeMap[Octonion]):
    """Element ``Σ_A a_A ⊗ g_A`` of 𝕆⊗Cl_dim."""

    def _check_coeff(self, coeff: Octonion) -> None:
        if not isinstance(coeff, Octonion):
            raise TypeError(f"TensorElement coefficients are octonions, got {type(coeff).__name__}")

    def _new(self, terms: Dict[int, Octonion]) -> "TensorElement":
        return TensorElement(self.dim, terms)

    def _zero_coeff(self) -> Octonion:
        return Octonion.zero()

    @classmethod
    def zero(cls, dim: int) -> "TensorElement":
        return cls(dim, {})

    @classmethod
    def from_octonion(cls, value: Octonion, dim: int) -> "TensorElement":
        """``value ⊗ 1``."""
        return cls(dim, {0: value})

    @classmethod
    def from_multivector(cls, value: Multivector) -> "TensorElement":
        """``e₀ ⊗ value``."""
        return cls(value.dim, {m: Octonion.scalar(c) for m, c in value.terms.items()})

    @classmethod
    def term(cls, i: int, indices: Sequence[int], dim: int, coeff: Scalar = 1) -> "TensorElement":
        """``coeff · e_i ⊗ g_{indices}`` with the blade taken in the given order."""
        blade = Multivector.blade(indices, dim, coeff)
        e_i = Octonion.basis(i)
        return cls(dim, {m: e_i.scale(c) for m, c in blade.terms.items()})

    def left_mul(self, a: Octonion) -> "TensorElement":
        return oct_left_mul(a, self)

    def right_mul(self, a: Octonion) -> "TensorElement":
        return oct_right_mul(self, a)

    def octonion_components(self) -> List[Multivector]:
        """Direct decomposition ``t = Σ_i e_i ⊗ t_i``; returns ``[t_0, ..., t_7]``."""
        parts: List[Dict[int, Fraction]] = [{} for _ in range(8)]
        for mask, coeff in self.terms.items():
            for i, c in enumerate(coeff.coeffs):
                if c:
                    parts[i][mask] = c
        return [Multivector(self.dim, p) for p in parts]

    def real_part(self) -> Multivector:
        return self.octonion_components()[0]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for mask, coeff in self.sorted_terms():
            name = "".join(f"g{k}" for k in blade_indices(mask)) or "1"
            chunks.append(f"({coeff}){name}")
        return " + ".join(chunks)


@dataclass(frozen=True, eq=False)
class MultiTensorElement(_BladeMap[MultiOctonion]):
    """Element of 𝕆ⁿ⊗Cl_{8n}; ``dim`` is always ``8n``."""

    n: int = 1

    def __post_init__(self) -> None:
        if self.n < 1 or self.dim != 8 * self.n:
            raise DimensionMismatchError(f"𝕆ⁿ⊗Cl_8n needs dim = 8n, got dim={self.dim}, n={self.n}")
        super().__post_init__()

    def _check_coeff(self, coeff: MultiOctonion) -> None:
        if not isinstance(coeff, MultiOctonion) or coeff.n != self.n:
            raise DimensionMismatchError(f"coefficients of 𝕆^{self.n}⊗Cl must have {self.n} slots")

    def _new(self, terms: Dict[int, MultiOctonion]) -> "MultiTensorElement":
        return MultiTensorElement(self.dim, terms, self.n)

    def _zero_coeff(self) -> MultiOctonion:
        return MultiOctonion.zero(self.n)

    def _check_same(self, other: "MultiTensorElement") -> None:  # type: ignore[override]
        super()._check_same(other)
        if self.n != other.n:
            raise DimensionMismatchError(f"𝕆^{self.n} and 𝕆^{other.n} do not mix")

    def __hash__(self) -> int:
        return hash(("MultiTensorElement", self.n, frozenset(self.terms.items())))

    @classmethod
    def zero(cls, n: int) -> "MultiTensorElement":
        return cls(8 * n, {}, n)

    @classmethod
    def from_multi_octonion(cls, value: MultiOctonion) -> "MultiTensorElement":
        return cls(8 * value.n, {0: value}, value.n)

    def slot(self, k: int) -> TensorElement:
        """The slot-k part as an element of 𝕆⊗Cl_{8n}."""
        if not 0 <= k < self.n:
            raise IndexRangeError(f"slot {k} outside 0..{self.n - 1}")
        return TensorElement(self.dim, {m: c.slots[k] for m, c in self.terms.items()})

    def collapse(self) -> TensorElement:
        """Sum of the slots, mapping 𝕆ⁿ⊗Cl_{8n} onto 𝕆⊗Cl_{8n}."""
        return TensorElement(self.dim, {m: c.total() for m, c in self.terms.items()})


def tens_product(s: TensorElement, t: TensorElement) -> TensorElement:
    return s.product(t)


def multi_tens_product(s: MultiTensorElement, t: MultiTensorElement) -> MultiTensorElement:
    return s.product(t)


def embed_vector(coords: Sequence[Union[int, Fraction]]) -> TensorElement:
    """``Σ_k x_k e₀⊗g_k`` in 𝕆⊗Cl_m with m = len(coords)."""
    return TensorElement(len(coords), {1 << k: Octonion.scalar(c) for k, c in enumerate(coords)})


def multi_embed(coords: Sequence[Union[int, Fraction]], n: int) -> MultiTensorElement:
    """``Σ_j Σ_i x_{8j+i} e₀^j⊗g_{8j+i}``: block j is carried by slot j."""
    if len(coords) != 8 * n:
        raise DimensionMismatchError(f"expected {8 * n} coordinates, got {len(coords)}")
    terms = {}
    for k, c in enumerate(coords):
        terms[1 << k] = MultiOctonion.in_slot(k // 8, Octonion.scalar(c), n)
    return MultiTensorElement(8 * n, terms, n)


def oct_left_mul(a: Octonion, t: TensorElement) -> TensorElement:
    return t.map_coefficients(lambda c: oct_mul(a, c))


def oct_right_mul(t: TensorElement, a: Octonion) -> TensorElement:
    return t.map_coefficients(lambda c: oct_mul(c, a))


def multi_oct_left_mul(
    a: Union[Octonion, MultiOctonion], t: MultiTensorElement
) -> MultiTensorElement:
    if isinstance(a, Octonion):
        return t.map_coefficients(lambda c: c.map(lambda s: oct_mul(a, s)))
    if a.n != t.n:
        raise DimensionMismatchError(f"𝕆^{a.n} cannot act on 𝕆^{t.n}⊗Cl")
    return t.map_coefficients(lambda c: a * c)


def multi_oct_right_mul(
    t: MultiTensorElement, a: Union[Octonion, MultiOctonion]
) -> MultiTensorElement:
    if isinstance(a, Octonion):
        return t.map_coefficients(lambda c: c.map(lambda s: oct_mul(s, a)))
    if a.n != t.n:
        raise DimensionMismatchError(f"𝕆^{a.n} cannot act on 𝕆^{t.n}⊗Cl")
    return t.map_coefficients(lambda c: c * a)
