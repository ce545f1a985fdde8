# -*- coding: utf-8 -*-
"""
The finite subgroup {J_0, ..., J_7} ≅ (Z_2)^3 of Aut(𝕆).

J_j flips the sign of e_1, e_2, e_4 according to the binary digits of
``j = j3*4 + j2*2 + j1`` and extends multiplicatively to the other basis
elements. The module also provides the sign exponents σ(j, i) with
``J_j(conj(e_i)) = (-1)^σ(j,i) e_i`` and the averaging projections onto the
coordinate axes of 𝕆 and 𝕆⊗Cl_m.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple, TypeVar, Union

import numpy as np

from .algebra.clifford import Multivector
from .algebra.octonion import FANO_TRIPLES, Octonion, basis_mul, oct_conj, oct_mul
from .algebra.tensor import MultiTensorElement, TensorElement, oct_left_mul
from .errors import IdentityDefect, IndexRangeError

logger = logging.getLogger(__name__)

GENERATORS: Tuple[int, int, int] = (1, 2, 4)
PHI_TRIPLES: Tuple[Tuple[int, int, int], ...] = FANO_TRIPLES

TensorLike = TypeVar("TensorLike", TensorElement, MultiTensorElement)


def _check_index(j: int) -> None:
    if not 0 <= j < 8:
        raise IndexRangeError(f"involution index {j} outside 0..7")


def binary_digits(j: int) -> Tuple[int, int, int]:
    """``(j3, j2, j1)`` with ``j = j3*4 + j2*2 + j1``."""
    _check_index(j)
    return (j >> 2) & 1, (j >> 1) & 1, j & 1


def generator_signs(j: int) -> Dict[int, int]:
    j3, j2, j1 = binary_digits(j)
    return {1: (-1) ** j1, 2: (-1) ** j2, 4: (-1) ** j3}


def _derive_signs(j: int) -> Tuple[List[int], Dict[int, Tuple[int, int]]]:
    """Close the generator signs under multiplication.

    Returns the sign list and, for each derived index, the pair it was first
    obtained from.
    """
    signs: Dict[int, int] = {0: 1}
    signs.update(generator_signs(j))
    paths: Dict[int, Tuple[int, int]] = {}
    changed = True
    while changed:
        changed = False
        for a in sorted(signs):
            for b in sorted(signs):
                _, c = basis_mul(a, b)
                if c not in signs:
                    # J(e_a e_b) = J(e_a) J(e_b); the product sign cancels.
                    signs[c] = signs[a] * signs[b]
                    paths[c] = (a, b)
                    changed = True
    return [signs[k] for k in range(8)], paths


@lru_cache(maxsize=None)
def sign_row(j: int) -> Tuple[int, ...]:
    """Entry k is the sign with ``J_j(e_k) = sign * e_k``."""
    _check_index(j)
    signs, paths = _derive_signs(j)
    logger.debug("J_%d signs %s derived via %s", j, signs, paths)
    return tuple(signs)


def derivation_consistent(j: int) -> bool:
    """Every product ``e_a e_b = ±e_c`` gives the same sign for e_c."""
    row = sign_row(j)
    for a in range(1, 8):
        for b in range(1, 8):
            if a == b:
                continue
            _, c = basis_mul(a, b)
            if row[c] != row[a] * row[b]:
                return False
    return True


def j_apply(j: int, x: Octonion) -> Octonion:
    row = sign_row(j)
    return Octonion(tuple(c if s > 0 else -c for s, c in zip(row, x.coeffs)))


def j_apply_tensor(j: int, t: TensorLike) -> TensorLike:
    """``J_j(e_i g_A) = J_j(e_i) g_A``, slotwise on 𝕆ⁿ coefficients."""
    if isinstance(t, MultiTensorElement):
        return t.map_coefficients(lambda c: c.map(lambda s: j_apply(j, s)))
    if isinstance(t, TensorElement):
        return t.map_coefficients(lambda c: j_apply(j, c))
    raise TypeError(f"J_j does not act on {type(t).__name__}")


@lru_cache(maxsize=None)
def sigma(j: int, i: int) -> int:
    """σ(j, i) in {0, 1}, read off ``J_j(conj(e_i))``."""
    _check_index(j)
    _check_index(i)
    image = j_apply(j, oct_conj(Octonion.basis(i)))
    coeff = image[i]
    if image.support() != [i] or abs(coeff) != 1:
        raise IdentityDefect(f"J_{j}(conj(e_{i})) = ±e_{i}", expected=f"±e{i}", actual=str(image))
    return 0 if coeff > 0 else 1


def sigma_sign(j: int, i: int) -> int:
    return -1 if sigma(j, i) else 1


def sigma_table() -> np.ndarray:
    return np.array([[sigma(j, i) for i in range(8)] for j in range(8)], dtype=np.int8)


def jsign_table() -> np.ndarray:
    return np.array([list(sign_row(j)) for j in range(8)], dtype=np.int8)


def real_part_by_averaging(x: Octonion) -> Fraction:
    """``Re x = (1/8) Σ_j J_j(x)``."""
    total = Octonion.zero()
    for j in range(8):
        total = total + j_apply(j, x)
    mean = total.scale(Fraction(1, 8))
    if not mean.is_real():
        raise IdentityDefect("averaging over J_j is real", expected="real", actual=str(mean))
    return mean.real_part()


def project_coefficient(i: int, x: Octonion) -> Fraction:
    """``x_i = (1/8) e_i (Σ_j (-1)^σ(j,i) J_j(x))``, evaluated literally."""
    _check_index(i)
    total = Octonion.zero()
    for j in range(8):
        image = j_apply(j, x)
        total = total - image if sigma(j, i) else total + image
    result = oct_mul(Octonion.basis(i), total).scale(Fraction(1, 8))
    if not result.is_real():
        raise IdentityDefect(f"projection P_{i} is real", expected="real", actual=str(result))
    return result.real_part()


def projection(i: int, x: Octonion) -> Octonion:
    """The orthogonal projection ℙ_i: 𝕆 → ℝe_i."""
    return Octonion.basis(i, project_coefficient(i, x))


def project_tensor_coefficient(i: int, p: TensorElement) -> Multivector:
    """``p_i = (1/8) e_i (Σ_j (-1)^σ(j,i) J_j(p))`` for ``p = Σ e_i p_i``."""
    _check_index(i)
    total = TensorElement.zero(p.dim)
    for j in range(8):
        image = j_apply_tensor(j, p)
        total = total - image if sigma(j, i) else total + image
    result = oct_left_mul(Octonion.basis(i), total).scale(Fraction(1, 8))
    if not result.is_real():
        raise IdentityDefect(
            f"tensor projection onto e_{i} lies in e0⊗Cl", expected="real", actual=str(result)
        )
    return result.real_part()


def group_compose(i: int, j: int) -> int:
    _check_index(i)
    _check_index(j)
    return i ^ j


def compose_maps_agree(i: int, j: int) -> bool:
    """``J_i ∘ J_j = J_{i XOR j}`` on every basis octonion."""
    k = group_compose(i, j)
    for b in range(8):
        e_b = Octonion.basis(b)
        if j_apply(i, j_apply(j, e_b)) != j_apply(k, e_b):
            return False
    return True


def phi_invariance(j: int) -> bool:
    """J_j pulls every term e^{abc} of φ back to itself with coefficient +1."""
    row = sign_row(j)
    if row[0] != 1:
        return False
    return all(row[a] * row[b] * row[c] == 1 for a, b, c in PHI_TRIPLES)


def is_automorphism_on_basis(j: int) -> bool:
    for a in range(8):
        for b in range(8):
            e_a, e_b = Octonion.basis(a), Octonion.basis(b)
            if j_apply(j, oct_mul(e_a, e_b)) != oct_mul(j_apply(j, e_a), j_apply(j, e_b)):
                return False
    return True


def signed_sum(i: int, elements: List[Union[TensorElement, MultiTensorElement]]) -> Union[TensorElement, MultiTensorElement]:
    """``Σ_j (-1)^σ(j,i) elements[j]`` over the eight group elements."""
    if len(elements) != 8:
        raise IndexRangeError(f"expected 8 elements, got {len(elements)}")
    total = elements[0] if not sigma(0, i) else -elements[0]
    for j in range(1, 8):
        total = total - elements[j] if sigma(j, i) else total + elements[j]
    return total
