# -*- coding: utf-8 -*-
"""
Octonionic Witt bases, twistor vectors and Hermitian variables.

For one block (𝕆⊗Cl_8):

* ``Ω = Σ_i conj(e_i) g_i`` and the Witt basis ``f_i = J_i(Ω)``;
* twistor vectors ``X_i = Φ⁻¹(Φ(X) conj(e_i))``;
* Hermitian variables ``Z_i = J_i(Ω Φ(X)) = f_i J_i(Φ(X))``;
* the basis change ``X_i = (1/8) e_i Σ_j (-1)^σ(j,i) Z_j`` and
  ``Z_i = Σ_j J_i(e_j) X_j``.

Block k of Cl_{8n} uses the generators ``g_{8k}, ..., g_{8k+7}``. The 𝕆ⁿ
variants carry block k in slot k of the octonion n-tuple.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

from .algebra.clifford import Multivector, mv_anticommutator, mv_from_vector
from .algebra.octonion import Octonion, oct_conj, oct_inner, oct_mul, phi_inverse, phi_map, to_fraction
from .algebra.tensor import (
    MultiOctonion,
    MultiTensorElement,
    TensorElement,
    embed_vector,
    multi_embed,
    multi_oct_left_mul,
    oct_left_mul,
    tens_product,
)
from .errors import DimensionMismatchError, IdentityDefect, IndexRangeError
from .involutions import j_apply, j_apply_tensor, signed_sum

logger = logging.getLogger(__name__)

Coordinate = Union[int, Fraction]
WittElement = Union[TensorElement, MultiTensorElement]


def _check_block(k: int, n: int) -> None:
    if n < 1:
        raise IndexRangeError(f"block count must be at least 1, got {n}")
    if not 0 <= k < n:
        raise IndexRangeError(f"block {k} outside 0..{n - 1}")


def _coords8(coords: Sequence[Coordinate]) -> Tuple[Fraction, ...]:
    if len(coords) != 8:
        raise DimensionMismatchError(f"a block vector has 8 coordinates, got {len(coords)}")
    return tuple(to_fraction(c) for c in coords)


def omega(k: int, n: int = 1) -> TensorElement:
    """``Ω_k = Σ_i conj(e_i) g_{8k+i}`` in 𝕆⊗Cl_{8n}."""
    _check_block(k, n)
    return TensorElement(8 * n, {1 << (8 * k + i): oct_conj(Octonion.basis(i)) for i in range(8)})


def omega_multi(k: int, n: int = 1) -> MultiTensorElement:
    """``Ω̂_k = Σ_i conj(e_i^k) g_{8k+i}`` in 𝕆ⁿ⊗Cl_{8n}."""
    _check_block(k, n)
    terms = {
        1 << (8 * k + i): MultiOctonion.in_slot(k, oct_conj(Octonion.basis(i)), n)
        for i in range(8)
    }
    return MultiTensorElement(8 * n, terms, n)


def phi_block(coords: Sequence[Coordinate], k: int, n: int) -> MultiOctonion:
    """``Φ_k: ℝ⁸ → 𝕆ⁿ``, ``Σ x_i g_i ↦ Σ x_i e_i^k``."""
    _check_block(k, n)
    return MultiOctonion.in_slot(k, phi_map(_coords8(coords)), n)


@dataclass(frozen=True)
class WittBasis:
    """``f[k][i] = J_i(Ω_k)`` (or ``J_i(Ω̂_k)`` when ``multi``)."""

    n: int
    f: Tuple[Tuple[WittElement, ...], ...]
    multi: bool = False

    @property
    def dim(self) -> int:
        return 8 * self.n

    def element(self, k: int, i: int) -> WittElement:
        _check_block(k, self.n)
        if not 0 <= i < 8:
            raise IndexRangeError(f"Witt index {i} outside 0..7")
        return self.f[k][i]


@lru_cache(maxsize=16)
def witt_basis(n: int = 1) -> WittBasis:
    if n < 1:
        raise IndexRangeError(f"block count must be at least 1, got {n}")
    f = tuple(tuple(j_apply_tensor(i, omega(k, n)) for i in range(8)) for k in range(n))
    logger.debug("built Witt basis of O⊗Cl_%d", 8 * n)
    return WittBasis(n=n, f=f)


@lru_cache(maxsize=16)
def witt_basis_multi(n: int = 1) -> WittBasis:
    if n < 1:
        raise IndexRangeError(f"block count must be at least 1, got {n}")
    f = tuple(tuple(j_apply_tensor(i, omega_multi(k, n)) for i in range(8)) for k in range(n))
    logger.debug("built Witt basis of O^%d⊗Cl_%d", n, 8 * n)
    return WittBasis(n=n, f=f, multi=True)


@dataclass(frozen=True)
class TwistorFrame:
    """Twistor vectors of one block; ``vectors[i]`` holds block-local coordinates."""

    vectors: Tuple[Tuple[Fraction, ...], ...]
    block: int = 0
    n: int = 1

    def embedded(self, i: int) -> Tuple[Fraction, ...]:
        """Coordinates of X_i in ℝ^{8n}."""
        coords = [Fraction(0)] * (8 * self.n)
        coords[8 * self.block : 8 * self.block + 8] = self.vectors[i]
        return tuple(coords)

    def as_multivector(self, i: int) -> Multivector:
        return mv_from_vector(self.embedded(i))

    def as_tensor(self, i: int) -> TensorElement:
        return embed_vector(self.embedded(i))


@dataclass(frozen=True)
class HermitianFrame:
    """Hermitian variables ``Z_0 ... Z_7`` of one block."""

    variables: Tuple[WittElement, ...]
    block: int = 0
    n: int = 1


def twistor_vectors(coords: Sequence[Coordinate], block: int = 0, n: int = 1) -> TwistorFrame:
    """``X_i = Φ⁻¹(Φ(X) conj(e_i))`` for the block-local coordinates of X."""
    _check_block(block, n)
    x = phi_map(_coords8(coords))
    vectors = tuple(phi_inverse(oct_mul(x, oct_conj(Octonion.basis(i)))) for i in range(8))
    return TwistorFrame(vectors=vectors, block=block, n=n)


def hermitian_variables(
    coords: Sequence[Coordinate],
    block: int = 0,
    n: int = 1,
) -> HermitianFrame:
    """``Z_i = J_i(Ω Φ(X))``, cross-checked against ``f_i J_i(Φ(X))``."""
    _check_block(block, n)
    dim = 8 * n
    x = phi_map(_coords8(coords))
    basis = witt_basis(n)
    omega_x = tens_product(omega(block, n), TensorElement.from_octonion(x, dim))
    variables = []
    for i in range(8):
        via_omega = j_apply_tensor(i, omega_x)
        via_witt = tens_product(basis.f[block][i], TensorElement.from_octonion(j_apply(i, x), dim))
        if via_omega != via_witt:
            raise IdentityDefect(f"Z_{i} = J_{i}(ΩΦ(X)) = f_{i}J_{i}(Φ(X))", str(via_omega), str(via_witt))
        variables.append(via_omega)
    return HermitianFrame(variables=tuple(variables), block=block, n=n)


def hermitian_variables_multi(
    coords: Sequence[Coordinate],
    block: int = 0,
    n: int = 1,
) -> HermitianFrame:
    """``Z_i^j = f̂_i^j J_i(Φ_j(X^j))`` in 𝕆ⁿ⊗Cl_{8n}."""
    _check_block(block, n)
    dim = 8 * n
    x = phi_block(coords, block, n)
    basis = witt_basis_multi(n)
    omega_x = omega_multi(block, n).product(MultiTensorElement(dim, {0: x}, n))
    variables = []
    for i in range(8):
        twisted = MultiTensorElement(dim, {0: x.map(lambda s: j_apply(i, s))}, n)
        via_witt = basis.f[block][i].product(twisted)
        via_omega = j_apply_tensor(i, omega_x)
        if via_omega != via_witt:
            raise IdentityDefect(f"Ẑ_{i} = J_{i}(Ω̂Φ_j(X)) = f̂_{i}J_{i}(Φ_j(X))", str(via_omega), str(via_witt))
        variables.append(via_witt)
    return HermitianFrame(variables=tuple(variables), block=block, n=n)


def twistor_from_hermitian(frame: HermitianFrame) -> TwistorFrame:
    """``X_i = (1/8) e_i Σ_j (-1)^σ(j,i) Z_j``."""
    lo, hi = 8 * frame.block, 8 * frame.block + 8
    vectors = []
    for i in range(8):
        combined = signed_sum(i, list(frame.variables))
        if isinstance(combined, MultiTensorElement):
            combined = combined.slot(frame.block)
        recovered = oct_left_mul(Octonion.basis(i), combined).scale(Fraction(1, 8))
        if not recovered.is_real():
            raise IdentityDefect(f"X_{i} recovered in e0⊗Cl", expected="real", actual=str(recovered))
        coords = recovered.real_part().vector_coords()
        if any(coords[:lo]) or any(coords[hi:]):
            raise IdentityDefect(f"X_{i} stays in block {frame.block}", expected="block-local", actual=coords)
        vectors.append(tuple(coords[lo:hi]))
    return TwistorFrame(vectors=tuple(vectors), block=frame.block, n=frame.n)


def hermitian_from_twistor(frame: TwistorFrame) -> HermitianFrame:
    """``Z_i = Σ_j J_i(e_j) X_j``."""
    dim = 8 * frame.n
    variables = []
    for i in range(8):
        terms = {}
        for j in range(8):
            coeff = j_apply(i, Octonion.basis(j))
            for m, value in enumerate(frame.vectors[j]):
                if value:
                    mask = 1 << (8 * frame.block + m)
                    term = coeff.scale(value)
                    terms[mask] = terms[mask] + term if mask in terms else term
        variables.append(TensorElement(dim, terms))
    return HermitianFrame(variables=tuple(variables), block=frame.block, n=frame.n)


@dataclass(frozen=True)
class GeneratorExpression:
    """Evaluation of ``(1/8) ē_i Σ_j (-1)^σ(j,i) f_j^k`` and its literal e_i variant."""

    i: int
    block: int
    value: WittElement
    literal: WittElement
    literal_matches: bool


def express_generator(i: int, k: int, basis: WittBasis) -> GeneratorExpression:
    """Recover ``g_{8k+i}`` from the Witt basis with octonionic coefficients.

    Ω carries the conjugates ē_i, so the left factor ē_i returns ``g_{8k+i}``;
    with e_i on the left the result is ``-g_{8k+i}`` for i ≥ 1.
    """
    _check_block(k, basis.n)
    if not 0 <= i < 8:
        raise IndexRangeError(f"generator index {i} outside 0..7")
    combined = signed_sum(i, list(basis.f[k]))
    mask = 1 << (8 * k + i)
    if basis.multi:
        value = multi_oct_left_mul(oct_conj(Octonion.basis(i)), combined).scale(Fraction(1, 8))
        literal = multi_oct_left_mul(Octonion.basis(i), combined).scale(Fraction(1, 8))
        expected: WittElement = MultiTensorElement(
            basis.dim, {mask: MultiOctonion.in_slot(k, Octonion.basis(0), basis.n)}, basis.n
        )
    else:
        value = oct_left_mul(oct_conj(Octonion.basis(i)), combined).scale(Fraction(1, 8))
        literal = oct_left_mul(Octonion.basis(i), combined).scale(Fraction(1, 8))
        expected = TensorElement(basis.dim, {mask: Octonion.basis(0)})
    if value != expected:
        raise IdentityDefect(f"g_{8 * k + i} from Witt basis", str(expected), str(value))
    return GeneratorExpression(
        i=i, block=k, value=value, literal=literal, literal_matches=literal == expected
    )


@dataclass(frozen=True)
class WittDecomposition:
    """Per-block frames of ``X ∈ ℝ^{8n}`` and the reconstruction ``(1/8) ΣΣ Z_i^j``."""

    n: int
    twistors: Tuple[TwistorFrame, ...]
    hermitians: Tuple[HermitianFrame, ...]
    reconstruction: WittElement
    exact: bool
    multi: bool = False


def _split_blocks(coords: Sequence[Coordinate], n: int) -> List[Tuple[Fraction, ...]]:
    if n < 1:
        raise IndexRangeError(f"block count must be at least 1, got {n}")
    if len(coords) != 8 * n:
        raise DimensionMismatchError(f"expected {8 * n} coordinates, got {len(coords)}")
    values = [to_fraction(c) for c in coords]
    return [tuple(values[8 * j : 8 * j + 8]) for j in range(n)]


def witt_decompose(coords: Sequence[Coordinate], n: int = 1, strict: bool = True) -> WittDecomposition:
    """``X^j = (1/8) Σ_i Z_i^j`` per block and ``X = (1/8) Σ_j Σ_i f_i^j J_i(Φ(X^j))``."""
    blocks = _split_blocks(coords, n)
    dim = 8 * n
    twistors = []
    hermitians = []
    total = TensorElement.zero(dim)
    for j, block_coords in enumerate(blocks):
        twistors.append(twistor_vectors(block_coords, j, n))
        frame = hermitian_variables(block_coords, j, n)
        hermitians.append(frame)
        for z in frame.variables:
            total = total + z
    reconstruction = total.scale(Fraction(1, 8))
    exact = reconstruction == embed_vector([to_fraction(c) for c in coords])
    if not exact:
        logger.warning("Witt decomposition of %s is not exact", list(coords))
        if strict:
            raise IdentityDefect("X = (1/8) ΣΣ Z_i^j", str(embed_vector(coords)), str(reconstruction))
    return WittDecomposition(
        n=n,
        twistors=tuple(twistors),
        hermitians=tuple(hermitians),
        reconstruction=reconstruction,
        exact=exact,
    )


def witt_decompose_multi(coords: Sequence[Coordinate], n: int = 1, strict: bool = True) -> WittDecomposition:
    """Witt decomposition in 𝕆ⁿ⊗Cl_{8n}; block j is reconstructed in slot j."""
    blocks = _split_blocks(coords, n)
    twistors = []
    hermitians = []
    total = MultiTensorElement.zero(n)
    for j, block_coords in enumerate(blocks):
        twistors.append(twistor_vectors(block_coords, j, n))
        frame = hermitian_variables_multi(block_coords, j, n)
        hermitians.append(frame)
        for z in frame.variables:
            total = total + z
    reconstruction = total.scale(Fraction(1, 8))
    expected = multi_embed(coords, n)
    exact = reconstruction == expected
    if not exact:
        logger.warning("multi Witt decomposition of %s is not exact", list(coords))
        if strict:
            raise IdentityDefect("X = (1/8) ΣΣ Ẑ_i^j", str(expected), str(reconstruction))
    return WittDecomposition(
        n=n,
        twistors=tuple(twistors),
        hermitians=tuple(hermitians),
        reconstruction=reconstruction,
        exact=exact,
        multi=True,
    )


def gram_matrix(frame: TwistorFrame) -> List[List[Fraction]]:
    """``(X_i, X_j)`` through the isometry Φ."""
    images = [phi_map(v) for v in frame.vectors]
    return [[oct_inner(a, b) for b in images] for a in images]


@dataclass(frozen=True)
class AnticommutationRecord:
    """The 64 anticommutators ``X_i X_j + X_j X_i`` of one frame."""

    norm2: Fraction
    anticommutators: Tuple[Tuple[Multivector, ...], ...]
    failures: Tuple[Tuple[int, int], ...]
    gram_failures: Tuple[Tuple[int, int], ...]

    @property
    def passed(self) -> bool:
        return not self.failures and not self.gram_failures


def twistor_anticommutation(
    coords: Sequence[Coordinate], block: int = 0, n: int = 1
) -> AnticommutationRecord:
    """Check ``X_i X_j + X_j X_i = -2|X|² δ_ij`` in Cl_{8n} and ``(X_i, X_j) = |X|² δ_ij``."""
    frame = twistor_vectors(coords, block, n)
    norm2 = sum((c * c for c in _coords8(coords)), Fraction(0))
    dim = 8 * n
    vectors = [frame.as_multivector(i) for i in range(8)]
    diagonal = Multivector.scalar(-2 * norm2, dim)
    zero = Multivector.zero(dim)
    rows = []
    failures = []
    for i in range(8):
        row = []
        for j in range(8):
            value = mv_anticommutator(vectors[i], vectors[j])
            row.append(value)
            if value != (diagonal if i == j else zero):
                failures.append((i, j))
        rows.append(tuple(row))
    gram = gram_matrix(frame)
    gram_failures = [
        (i, j) for i in range(8) for j in range(8) if gram[i][j] != (norm2 if i == j else 0)
    ]
    if failures or gram_failures:
        logger.warning("twistor anticommutation failed at %s / %s", failures, gram_failures)
    return AnticommutationRecord(
        norm2=norm2,
        anticommutators=tuple(rows),
        failures=tuple(failures),
        gram_failures=tuple(gram_failures),
    )


def cross_block_anticommutators(coords: Sequence[Coordinate], n: int) -> List[Tuple[int, int, int, int]]:
    """Pairs ``(b, i, c, j)`` of different blocks whose twistor vectors fail to anticommute."""
    blocks = _split_blocks(coords, n)
    frames = [twistor_vectors(b, j, n) for j, b in enumerate(blocks)]
    vectors = [[f.as_multivector(i) for i in range(8)] for f in frames]
    bad = []
    for b in range(n):
        for c in range(b + 1, n):
            for i in range(8):
                for j in range(8):
                    if not mv_anticommutator(vectors[b][i], vectors[c][j]).is_zero():
                        bad.append((b, i, c, j))
    return bad


def witt_product_table(basis: WittBasis, k: int = 0) -> List[List[WittElement]]:
    """The products ``f_i f_j`` of block k, for reporting."""
    _check_block(k, basis.n)
    row = basis.f[k]
    return [[row[i].product(row[j]) for j in range(8)] for i in range(8)]
