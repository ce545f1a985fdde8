# -*- coding: utf-8 -*-
"""
Twistor and Hermitian frames over formal coordinates.

The coordinates x_0 ... x_{8n-1} are the variables of the polynomial ring of
:mod:`octowitt.diffops`. Every frame is linear in X, so the formal frame is
``Σ_l x_l · frame(g_l)``; identities are then checked as polynomial
identities (for example ``X_i X_j + X_j X_i = -2 (Σ x_l²) δ_ij``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from .algebra.octonion import Octonion
from .algebra.tensor import TensorElement
from .diffops import Polynomial, oct_left_mul_polynomial, sum_of_squares
from .errors import IdentityDefect
from .involutions import j_apply, signed_sum
from .witt import hermitian_variables, twistor_vectors, witt_basis

SignedVariable = Tuple[int, int]


def _unit(l: int) -> List[int]:
    unit = [0] * 8
    unit[l] = 1
    return unit


def formal_twistor_vectors(block: int = 0, n: int = 1) -> List[Polynomial]:
    nvars = 8 * n
    frames = [twistor_vectors(_unit(l), block, n) for l in range(8)]
    out = []
    for i in range(8):
        total = Polynomial.zero(nvars)
        for l, frame in enumerate(frames):
            total = total + Polynomial.variable(8 * block + l, nvars, frame.as_tensor(i))
        out.append(total)
    return out


def formal_hermitian_variables(block: int = 0, n: int = 1) -> List[Polynomial]:
    nvars = 8 * n
    frames = [hermitian_variables(_unit(l), block, n) for l in range(8)]
    out = []
    for i in range(8):
        total = Polynomial.zero(nvars)
        for l, frame in enumerate(frames):
            total = total + Polynomial.variable(8 * block + l, nvars, frame.variables[i])
        out.append(total)
    return out


def formal_twistor_anticommutation(block: int = 0, n: int = 1) -> List[Tuple[int, int]]:
    """Pairs (i, j) violating ``X_i X_j + X_j X_i = -2|X|² δ_ij`` as polynomials."""
    nvars = 8 * n
    xs = formal_twistor_vectors(block, n)
    diagonal = sum_of_squares(nvars, range(8 * block, 8 * block + 8)).scale(-2)
    zero = Polynomial.zero(nvars)
    bad = []
    for i in range(8):
        for j in range(8):
            value = xs[i] * xs[j] + xs[j] * xs[i]
            if value != (diagonal if i == j else zero):
                bad.append((i, j))
    return bad


def formal_round_trip(block: int = 0, n: int = 1) -> List[str]:
    """Failures of ``X → Z → X`` and ``X → Z`` (via the basis change) over formal coordinates."""
    xs = formal_twistor_vectors(block, n)
    zs = formal_hermitian_variables(block, n)
    failures = []
    for i in range(8):
        combined = signed_sum(i, zs)
        recovered = oct_left_mul_polynomial(Octonion.basis(i), combined).scale(Fraction(1, 8))
        if recovered != xs[i]:
            failures.append(f"X_{i} = (1/8) e_{i} Σ_j (-1)^σ(j,{i}) Z_j")
        rebuilt = Polynomial.zero(8 * n)
        for j in range(8):
            rebuilt = rebuilt + oct_left_mul_polynomial(j_apply(i, Octonion.basis(j)), xs[j])
        if rebuilt != zs[i]:
            failures.append(f"Z_{i} = Σ_j J_{i}(e_j) X_j")
    return failures


def z0_matches_twistor_sum(block: int = 0, n: int = 1) -> bool:
    """``Z_0 = Ω Φ(X) = Σ_j e_j X_j`` as polynomials."""
    xs = formal_twistor_vectors(block, n)
    z0 = formal_hermitian_variables(block, n)[0]
    total = Polynomial.zero(8 * n)
    for j in range(8):
        total = total + oct_left_mul_polynomial(Octonion.basis(j), xs[j])
    return total == z0


def twistor_sign_table() -> List[List[SignedVariable]]:
    """Row i, column m: ``(sign, l)`` such that X_i has ``sign · x_l`` on g_m."""
    frames = [twistor_vectors(_unit(l), 0, 1) for l in range(8)]
    rows = []
    for i in range(8):
        row: List[SignedVariable] = []
        for m in range(8):
            entries = [(int(frames[l].vectors[i][m]), l) for l in range(8) if frames[l].vectors[i][m]]
            if len(entries) != 1 or abs(entries[0][0]) != 1:
                raise IdentityDefect(f"X_{i} on g_{m} is a single signed coordinate", actual=entries)
            row.append(entries[0])
        rows.append(row)
    return rows


def witt_sign_table(n: int = 1, block: int = 0) -> List[List[int]]:
    """Row i, column m: the sign s with ``f_i`` containing ``s · e_m g_{8k+m}``."""
    basis = witt_basis(n)
    rows = []
    for i in range(8):
        f_i = basis.element(block, i)
        row = []
        for m in range(8):
            coeff = f_i.coefficient(1 << (8 * block + m))
            if coeff.support() != [m] or abs(coeff[m]) != 1:
                raise IdentityDefect(f"f_{i} on g_{m} is ±e_{m}", actual=str(coeff))
            row.append(int(coeff[m]))
        rows.append(row)
    return rows


def _component(p: Polynomial, j: int) -> Polynomial:
    return p.map_coefficients(
        lambda c: TensorElement.from_multivector(c.octonion_components()[j])
    )


def hermitian_sign_table(block: int = 0, n: int = 1) -> List[List[int]]:
    """Row i, column j: the sign s with ``Z_i`` containing ``s · e_j X_j`` (0 if neither)."""
    xs = formal_twistor_vectors(block, n)
    zs = formal_hermitian_variables(block, n)
    rows = []
    for i in range(8):
        row = []
        for j in range(8):
            part = _component(zs[i], j)
            if part == xs[j]:
                row.append(1)
            elif part == -xs[j]:
                row.append(-1)
            else:
                row.append(0)
        rows.append(row)
    return rows
