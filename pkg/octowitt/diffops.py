# -*- coding: utf-8 -*-
"""
Polynomials with tensor coefficients and constant-coefficient differential
operators: the Dirac operator ∂_X, the Fischer-dual twistor derivatives
∂_{X_i} and the Hermitian derivatives ∂_{Z_i}.

Operator coefficients multiply the coefficients of the differentiated
polynomial from the left.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .algebra.clifford import Multivector
from .algebra.octonion import Octonion, to_fraction
from .algebra.tensor import TensorElement, oct_left_mul, tens_product
from .errors import CodecError, DimensionMismatchError, IdentityDefect, IndexRangeError
from .involutions import j_apply
from .witt import twistor_vectors, witt_basis

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]


def _add_into(terms: Dict, key, value: TensorElement) -> None:
    terms[key] = terms[key] + value if key in terms else value


@dataclass(frozen=True, eq=False)
class Polynomial:
    """``Σ c_α x^α`` in ``nvars`` variables with coefficients in 𝕆⊗Cl_dim."""

    nvars: int
    terms: Dict[Exponents, TensorElement] = field(default_factory=dict)
    dim: Optional[int] = None

    def __post_init__(self) -> None:
        dim = self.nvars if self.dim is None else self.dim
        cleaned: Dict[Exponents, TensorElement] = {}
        for exps, coeff in self.terms.items():
            exps = tuple(exps)
            if len(exps) != self.nvars or any(e < 0 for e in exps):
                raise DimensionMismatchError(f"exponent {exps} does not fit {self.nvars} variables")
            if coeff.dim != dim:
                raise DimensionMismatchError(f"coefficient in Cl_{coeff.dim}, polynomial uses Cl_{dim}")
            if not coeff.is_zero():
                cleaned[exps] = coeff
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def zero(cls, nvars: int, dim: Optional[int] = None) -> "Polynomial":
        return cls(nvars, {}, dim)

    @classmethod
    def constant(cls, value: TensorElement, nvars: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: value}, value.dim)

    @classmethod
    def variable(
        cls, k: int, nvars: int, coeff: Optional[TensorElement] = None, dim: Optional[int] = None
    ) -> "Polynomial":
        """``coeff · x_k``; the default coefficient is ``e₀⊗1``."""
        if not 0 <= k < nvars:
            raise IndexRangeError(f"variable x_{k} outside 0..{nvars - 1}")
        if coeff is None:
            coeff = TensorElement.from_octonion(Octonion.scalar(1), nvars if dim is None else dim)
        exps = tuple(1 if m == k else 0 for m in range(nvars))
        return cls(nvars, {exps: coeff}, coeff.dim)

    def _check(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars or self.dim != other.dim:
            raise DimensionMismatchError(
                f"polynomials over ({self.nvars} vars, Cl_{self.dim}) and "
                f"({other.nvars} vars, Cl_{other.dim}) do not mix"
            )

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.dim == other.dim and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, self.dim, frozenset(self.terms.items())))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            _add_into(out, exps, coeff)
        return Polynomial(self.nvars, out, self.dim)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()}, self.dim)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = to_fraction(factor)
        return Polynomial(self.nvars, {e: c.scale(factor) for e, c in self.terms.items()}, self.dim)

    def map_coefficients(self, fn) -> "Polynomial":
        return Polynomial(self.nvars, {e: fn(c) for e, c in self.terms.items()}, self.dim)

    def left_mul(self, value: TensorElement) -> "Polynomial":
        return self.map_coefficients(lambda c: tens_product(value, c))

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            out: Dict[Exponents, TensorElement] = {}
            for a, x in self.terms.items():
                for b, y in other.terms.items():
                    exps = tuple(p + q for p, q in zip(a, b))
                    _add_into(out, exps, tens_product(x, y))
            return Polynomial(self.nvars, out, self.dim)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Scalar) -> "Polynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def derivative(self, k: int) -> "Polynomial":
        if not 0 <= k < self.nvars:
            raise IndexRangeError(f"variable x_{k} outside 0..{self.nvars - 1}")
        out: Dict[Exponents, TensorElement] = {}
        for exps, coeff in self.terms.items():
            power = exps[k]
            if power:
                lowered = exps[:k] + (power - 1,) + exps[k + 1 :]
                _add_into(out, lowered, coeff.scale(power))
        return Polynomial(self.nvars, out, self.dim)

    def sorted_terms(self) -> List[Tuple[Exponents, TensorElement]]:
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), tuple(-e for e in item[0])))


@dataclass(frozen=True, eq=False)
class FirstOrderOperator:
    """``D = Σ_k c_k ∂/∂x_k`` with constant coefficients in 𝕆⊗Cl_dim."""

    nvars: int
    coeffs: Tuple[TensorElement, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        if len(coeffs) != self.nvars:
            raise DimensionMismatchError(f"{len(coeffs)} coefficients for {self.nvars} variables")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def dim(self) -> int:
        return self.coeffs[0].dim if self.coeffs else self.nvars

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FirstOrderOperator):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.nvars, self.coeffs))

    def __add__(self, other: "FirstOrderOperator") -> "FirstOrderOperator":
        _check_nvars(self, other)
        return FirstOrderOperator(self.nvars, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FirstOrderOperator") -> "FirstOrderOperator":
        _check_nvars(self, other)
        return FirstOrderOperator(self.nvars, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, factor: Scalar) -> "FirstOrderOperator":
        return FirstOrderOperator(self.nvars, tuple(c.scale(factor) for c in self.coeffs))

    def left_mul(self, value: TensorElement) -> "FirstOrderOperator":
        return FirstOrderOperator(self.nvars, tuple(tens_product(value, c) for c in self.coeffs))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)


@dataclass(frozen=True, eq=False)
class SecondOrderOperator:
    """``Σ_{k≤l} c_kl ∂²/∂x_k∂x_l`` with keys canonicalized to ``k ≤ l``."""

    nvars: int
    coeffs: Dict[Tuple[int, int], TensorElement] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned: Dict[Tuple[int, int], TensorElement] = {}
        for (k, l), coeff in self.coeffs.items():
            if not (0 <= k < self.nvars and 0 <= l < self.nvars):
                raise IndexRangeError(f"∂_{k}∂_{l} outside {self.nvars} variables")
            key = (min(k, l), max(k, l))
            _add_into(cleaned, key, coeff)
        object.__setattr__(self, "coeffs", {k: c for k, c in cleaned.items() if not c.is_zero()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SecondOrderOperator):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def __add__(self, other: "SecondOrderOperator") -> "SecondOrderOperator":
        _check_nvars(self, other)
        out = dict(self.coeffs)
        for key, coeff in other.coeffs.items():
            _add_into(out, key, coeff)
        return SecondOrderOperator(self.nvars, out)

    def scale(self, factor: Scalar) -> "SecondOrderOperator":
        return SecondOrderOperator(self.nvars, {k: c.scale(factor) for k, c in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs


Operator = Union[FirstOrderOperator, SecondOrderOperator]


def _check_nvars(a, b) -> None:
    if a.nvars != b.nvars:
        raise DimensionMismatchError(f"operators in {a.nvars} and {b.nvars} variables do not mix")


def _check_nvars_multiple(nvars: int) -> int:
    if nvars <= 0 or nvars % 8:
        raise DimensionMismatchError(f"operator dimension must be a positive multiple of 8, got {nvars}")
    return nvars // 8


def _unit(dim: int) -> TensorElement:
    return TensorElement.from_octonion(Octonion.scalar(1), dim)


def dirac(nvars: int) -> FirstOrderOperator:
    """``∂_X = Σ_k g_k ∂_{x_k}``."""
    _check_nvars_multiple(nvars)
    return FirstOrderOperator(
        nvars, tuple(TensorElement.from_multivector(Multivector.generator(k, nvars)) for k in range(nvars))
    )


def block_dirac(block: int, n: int) -> FirstOrderOperator:
    """The Dirac operator of block k, ``Σ_{m<8} g_{8k+m} ∂_{x_{8k+m}}``."""
    if not 0 <= block < n:
        raise IndexRangeError(f"block {block} outside 0..{n - 1}")
    nvars = 8 * n
    coeffs = []
    for k in range(nvars):
        if k // 8 == block:
            coeffs.append(TensorElement.from_multivector(Multivector.generator(k, nvars)))
        else:
            coeffs.append(TensorElement.zero(nvars))
    return FirstOrderOperator(nvars, tuple(coeffs))


def laplacian(nvars: int, block: Optional[int] = None, factor: Scalar = 1) -> SecondOrderOperator:
    """``factor · Σ_k ∂²/∂x_k²``, over one block when ``block`` is given."""
    unit = _unit(nvars).scale(factor)
    ks = range(nvars) if block is None else range(8 * block, 8 * block + 8)
    return SecondOrderOperator(nvars, {(k, k): unit for k in ks})


def twistor_derivative(i: int, block: int = 0, n: int = 1) -> FirstOrderOperator:
    """Fischer dual ``∂_{X_i} = Φ⁻¹(Φ(∂_X) conj(e_i))`` of the block Dirac operator.

    The symbol ∂_{x_l} takes the place of x_l, so the coefficient of
    ∂_{x_{8k+l}} is the twistor vector X_i of the unit vector g_l.
    """
    if not 0 <= i < 8:
        raise IndexRangeError(f"twistor index {i} outside 0..7")
    if not 0 <= block < n:
        raise IndexRangeError(f"block {block} outside 0..{n - 1}")
    nvars = 8 * n
    coeffs = [TensorElement.zero(nvars) for _ in range(nvars)]
    for l in range(8):
        unit = [0] * 8
        unit[l] = 1
        frame = twistor_vectors(unit, block, n)
        coeffs[8 * block + l] = TensorElement.from_multivector(frame.as_multivector(i))
    return FirstOrderOperator(nvars, tuple(coeffs))


def hermitian_derivative_routes(
    i: int, block: int = 0, n: int = 1
) -> Tuple[FirstOrderOperator, FirstOrderOperator]:
    """``f_i J_i(Φ(∂_X))`` and ``Σ_j J_i(e_j) ∂_{X_j}``."""
    if not 0 <= i < 8:
        raise IndexRangeError(f"Hermitian index {i} outside 0..7")
    nvars = 8 * n
    f_i = witt_basis(n).element(block, i)
    via_witt = [TensorElement.zero(nvars) for _ in range(nvars)]
    for l in range(8):
        symbol = TensorElement.from_octonion(j_apply(i, Octonion.basis(l)), nvars)
        via_witt[8 * block + l] = tens_product(f_i, symbol)
    via_twistor = FirstOrderOperator(nvars, tuple(TensorElement.zero(nvars) for _ in range(nvars)))
    for j in range(8):
        weight = TensorElement.from_octonion(j_apply(i, Octonion.basis(j)), nvars)
        via_twistor = via_twistor + twistor_derivative(j, block, n).left_mul(weight)
    return FirstOrderOperator(nvars, tuple(via_witt)), via_twistor


def hermitian_derivative(i: int, block: int = 0, n: int = 1) -> FirstOrderOperator:
    """``∂_{Z_i} = f_i J_i(Φ(∂_X))``, checked against ``Σ_j J_i(e_j) ∂_{X_j}``."""
    via_witt, via_twistor = hermitian_derivative_routes(i, block, n)
    if via_witt != via_twistor:
        raise IdentityDefect(f"∂Z_{i} construction routes (block {block}, n={n})")
    return via_witt


def _apply_first(op: FirstOrderOperator, p: Polynomial) -> Polynomial:
    out = Polynomial.zero(p.nvars, p.dim)
    for k, coeff in enumerate(op.coeffs):
        if coeff.is_zero():
            continue
        out = out + p.derivative(k).left_mul(coeff)
    return out


def _apply_second(op: SecondOrderOperator, p: Polynomial) -> Polynomial:
    out = Polynomial.zero(p.nvars, p.dim)
    for (k, l), coeff in op.coeffs.items():
        out = out + p.derivative(k).derivative(l).left_mul(coeff)
    return out


def op_apply(op: Operator, p: Polynomial) -> Polynomial:
    """``Σ_k c_k · ∂p/∂x_k`` (or the second-order analogue), coefficients on the left."""
    if op.nvars != p.nvars:
        raise DimensionMismatchError(f"operator in {op.nvars} variables, polynomial in {p.nvars}")
    if isinstance(op, FirstOrderOperator):
        return _apply_first(op, p)
    return _apply_second(op, p)


def op_add(a: Operator, b: Operator) -> Operator:
    if type(a) is not type(b):
        raise DimensionMismatchError("cannot add operators of different order")
    return a + b  # type: ignore[operator]


def op_scale(op: Operator, factor: Scalar) -> Operator:
    return op.scale(factor)


def op_compose_apply(first: FirstOrderOperator, second: FirstOrderOperator, p: Polynomial) -> Polynomial:
    """``first(second(p))``."""
    return op_apply(first, op_apply(second, p))


def op_anticommutator(a: FirstOrderOperator, b: FirstOrderOperator) -> SecondOrderOperator:
    """``ab + ba = Σ_{k,l} (a_k b_l + b_k a_l) ∂_k ∂_l`` accumulated on unordered pairs."""
    _check_nvars(a, b)
    out: Dict[Tuple[int, int], TensorElement] = {}
    for k, a_k in enumerate(a.coeffs):
        b_k = b.coeffs[k]
        if a_k.is_zero() and b_k.is_zero():
            continue
        for l in range(a.nvars):
            a_l, b_l = a.coeffs[l], b.coeffs[l]
            value = tens_product(a_k, b_l) + tens_product(b_k, a_l)
            if not value.is_zero():
                _add_into(out, (min(k, l), max(k, l)), value)
    return SecondOrderOperator(a.nvars, out)


def monomial_probes(nvars: int, dim: Optional[int] = None, max_degree: int = 2) -> Iterator[Polynomial]:
    """All monomials of degree ≤ 2 with coefficient ``e₀⊗1``."""
    unit = _unit(nvars if dim is None else dim)
    yield Polynomial.constant(unit, nvars)
    for k in range(nvars):
        yield Polynomial.variable(k, nvars, unit)
    if max_degree >= 2:
        for k in range(nvars):
            for l in range(k, nvars):
                exps = [0] * nvars
                exps[k] += 1
                exps[l] += 1
                yield Polynomial(nvars, {tuple(exps): unit}, unit.dim)


def op_equal(a: Operator, b: Operator) -> bool:
    """Exact structural equality, confirmed by action on monomials of degree ≤ 2."""
    if type(a) is not type(b) or a.nvars != b.nvars:
        return False
    structural = a == b
    dim = a.dim if isinstance(a, FirstOrderOperator) else a.nvars
    by_action = all(op_apply(a, p) == op_apply(b, p) for p in monomial_probes(a.nvars, dim))
    if structural != by_action:
        raise IdentityDefect("operator equality by structure and by action", structural, by_action)
    return structural


def parse_operator_spec(spec: str, nvars: int) -> FirstOrderOperator:
    """``dirac``, ``twistor:i[:block]`` or ``hermitian:i[:block]``."""
    n = _check_nvars_multiple(nvars)
    parts = spec.strip().lower().split(":")
    name = parts[0]
    if name == "dirac" and len(parts) == 1:
        return dirac(nvars)
    if name in {"twistor", "hermitian"} and len(parts) in (2, 3):
        try:
            i = int(parts[1])
            block = int(parts[2]) if len(parts) == 3 else 0
        except ValueError as exc:
            raise CodecError(f"malformed operator spec {spec!r}") from exc
        if name == "twistor":
            return twistor_derivative(i, block, n)
        return hermitian_derivative(i, block, n)
    raise CodecError(f"unknown operator {spec!r}; use dirac | twistor:i[:block] | hermitian:i[:block]")


def oct_left_mul_polynomial(a: Octonion, p: Polynomial) -> Polynomial:
    return p.map_coefficients(lambda c: oct_left_mul(a, c))


def sum_of_squares(nvars: int, variables: Optional[Sequence[int]] = None) -> Polynomial:
    """``Σ_k x_k²`` with coefficient ``e₀⊗1``."""
    out = Polynomial.zero(nvars)
    for k in variables if variables is not None else range(nvars):
        x = Polynomial.variable(k, nvars)
        out = out + x * x
    return out
