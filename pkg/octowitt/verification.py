# -*- coding: utf-8 -*-
"""
Identity suites behind ``octowitt verify``.

Each suite records how many checks it ran and every failure with its inputs.
Suites run in a fixed order; each one draws its random samples from its own
``random.Random`` seeded from the report seed and the suite position, so a
fixed seed gives an identical report.
"""

from __future__ import annotations

import json
import logging
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .algebra.clifford import Multivector, blade_indices, blade_mask, blade_product, mv_from_vector, mv_grade
from .algebra.octonion import FANO_TRIPLES, Octonion, associator, basis_mul, oct_conj, oct_mul
from .algebra.tensor import (
    MultiOctonion,
    MultiTensorElement,
    TensorElement,
    multi_tens_product,
    tens_product,
)
from .codec import encode_rational
from .diffops import (
    Polynomial,
    block_dirac,
    dirac,
    hermitian_derivative,
    hermitian_derivative_routes,
    laplacian,
    op_anticommutator,
    op_apply,
    op_compose_apply,
    op_equal,
    sum_of_squares,
    twistor_derivative,
)
from .errors import OctowittError
from .formal import (
    formal_round_trip,
    formal_twistor_anticommutation,
    hermitian_sign_table,
    twistor_sign_table,
    witt_sign_table,
    z0_matches_twistor_sum,
)
from .involutions import (
    compose_maps_agree,
    derivation_consistent,
    is_automorphism_on_basis,
    j_apply,
    phi_invariance,
    project_coefficient,
    project_tensor_coefficient,
    real_part_by_averaging,
    sigma,
    sign_row,
)
from .models import CheckFailure, SuiteResult, VerificationConfig, VerificationReport
from .reference import (
    PRINTED_ERRATA,
    PRINTED_HERMITIAN_SIGNS,
    PRINTED_TWISTOR_ROWS,
    PRINTED_WITT_SIGNS,
)
from .witt import (
    cross_block_anticommutators,
    express_generator,
    hermitian_from_twistor,
    hermitian_variables,
    hermitian_variables_multi,
    twistor_anticommutation,
    twistor_from_hermitian,
    twistor_vectors,
    witt_basis,
    witt_basis_multi,
    witt_decompose,
    witt_decompose_multi,
    witt_product_table,
)

logger = logging.getLogger(__name__)

# Lower bounds independent of --samples.
ALTERNATIVE_PAIRS = 1000
DECOMPOSITION_MIN_BLOCKS = 3


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return encode_rational(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


@dataclass
class SuiteContext:
    """Per-suite state: sample source, bounds and the running tally."""

    name: str
    rng: random.Random
    n_max: int
    samples: int
    bound: int
    observations: Dict[str, Any]
    checks_run: int = 0
    failures: List[CheckFailure] = field(default_factory=list)

    def check(
        self,
        check: str,
        ok: bool,
        inputs: Optional[Dict[str, Any]] = None,
        expected: Any = None,
        actual: Any = None,
    ) -> bool:
        self.checks_run += 1
        if not ok:
            failure = CheckFailure(
                check=check,
                inputs=_jsonable(inputs or {}),
                expected=_jsonable(expected),
                actual=_jsonable(actual),
            )
            self.failures.append(failure)
            logger.warning("%s failed: %s", check, failure.inputs)
        return ok

    def guard(self, check: str, fn: Callable[[], bool], inputs: Optional[Dict[str, Any]] = None) -> bool:
        """Run ``fn``; an ``OctowittError`` counts as a failure of ``check``."""
        try:
            ok = bool(fn())
        except OctowittError as exc:
            return self.check(check, False, inputs, expected="no error", actual=str(exc))
        return self.check(check, ok, inputs)

    # Samples

    def rational(self) -> Fraction:
        return Fraction(self.rng.randint(-self.bound, self.bound), self.rng.randint(1, self.bound))

    def coords(self, size: int) -> List[Fraction]:
        return [self.rational() for _ in range(size)]

    def octonion(self) -> Octonion:
        return Octonion(tuple(self.coords(8)))

    def blade(self, dim: int, max_grade: int = 4) -> int:
        grade = self.rng.randint(0, min(dim, max_grade))
        return blade_mask(sorted(self.rng.sample(range(dim), grade)))

    def multivector(self, dim: int, terms: int = 3) -> Multivector:
        return Multivector(dim, {self.blade(dim): self.rational() for _ in range(terms)})

    def tensor(self, dim: int, terms: int = 2, real: bool = False) -> TensorElement:
        out: Dict[int, Octonion] = {}
        for _ in range(terms):
            value = Octonion.scalar(self.rational()) if real else self.octonion()
            out[self.blade(dim)] = value
        return TensorElement(dim, out)

    def polynomial(self, nvars: int, terms: int = 3, max_degree: int = 3) -> Polynomial:
        out: Dict[Tuple[int, ...], TensorElement] = {}
        for _ in range(terms):
            exps = [0] * nvars
            for _ in range(self.rng.randint(0, max_degree)):
                exps[self.rng.randrange(nvars)] += 1
            out[tuple(exps)] = self.tensor(nvars, terms=1)
        return Polynomial(nvars, out)


def _oracle_blade_product(a: Sequence[int], b: Sequence[int]) -> Tuple[int, int]:
    """Concatenate, bubble-sort counting swaps, then contract adjacent repeats."""
    seq = list(a) + list(b)
    sign = 1
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    out: List[int] = []
    for k in seq:
        if out and out[-1] == k:
            out.pop()
            sign = -sign
        else:
            out.append(k)
    return sign, blade_mask(out)


def suite_octonion_laws(ctx: SuiteContext) -> None:
    one = Octonion.basis(0)
    for i in range(8):
        e_i = Octonion.basis(i)
        ctx.check("octonion.unit", oct_mul(one, e_i) == e_i == oct_mul(e_i, one), {"i": i})
        if i:
            ctx.check("octonion.square", oct_mul(e_i, e_i) == -one, {"i": i})
        for j in range(1, 8):
            if i and j != i:
                ctx.check(
                    "octonion.anticommute",
                    oct_mul(e_i, Octonion.basis(j)) == -oct_mul(Octonion.basis(j), e_i),
                    {"i": i, "j": j},
                )
    for a, b, c in FANO_TRIPLES:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            ctx.check("octonion.fano_triple", basis_mul(x, y) == (1, z), {"triple": [x, y, z]})
    ctx.check(
        "octonion.non_associative",
        not associator(Octonion.basis(1), Octonion.basis(2), Octonion.basis(4)).is_zero(),
    )
    for _ in range(max(ctx.samples, ALTERNATIVE_PAIRS)):
        a, b = ctx.octonion(), ctx.octonion()
        inputs = {"a": str(a), "b": str(b)}
        ctx.check("octonion.left_alternative", associator(a, a, b).is_zero(), inputs)
        ctx.check("octonion.right_alternative", associator(a, b, b).is_zero(), inputs)
        ctx.check("octonion.flexible", associator(a, b, a).is_zero(), inputs)
    for _ in range(ctx.samples):
        a, b = ctx.octonion(), ctx.octonion()
        inputs = {"a": str(a), "b": str(b)}
        ab = oct_mul(a, b)
        ctx.check("octonion.norm_multiplicative", ab.norm2() == a.norm2() * b.norm2(), inputs)
        ctx.check("octonion.conj_antimultiplicative", oct_conj(ab) == oct_mul(oct_conj(b), oct_conj(a)), inputs)
        ctx.check("octonion.norm_via_conj", oct_mul(a, oct_conj(a)) == Octonion.scalar(a.norm2()), inputs)
        if not a.is_zero():
            ctx.check("octonion.inverse", oct_mul(a, a.inverse()) == one, inputs)


def suite_clifford_laws(ctx: SuiteContext) -> None:
    for dim in (8, 16, 24):
        gens = [Multivector.generator(k, dim) for k in range(dim)]
        minus_two = Multivector.scalar(-2, dim)
        for i in range(dim):
            for j in range(dim):
                value = gens[i] * gens[j] + gens[j] * gens[i]
                expected = minus_two if i == j else Multivector.zero(dim)
                ctx.check("clifford.anticommutation", value == expected, {"dim": dim, "i": i, "j": j})
        for _ in range(ctx.samples):
            a, b = ctx.blade(dim, 6), ctx.blade(dim, 6)
            oracle = _oracle_blade_product(blade_indices(a), blade_indices(b))
            ctx.check(
                "clifford.blade_oracle",
                blade_product(a, b) == oracle,
                {"dim": dim, "a": blade_indices(a), "b": blade_indices(b)},
                expected=list(oracle),
                actual=list(blade_product(a, b)),
            )
        for _ in range(max(ctx.samples, 200)):
            u, v, w = ctx.multivector(dim), ctx.multivector(dim), ctx.multivector(dim)
            ctx.check(
                "clifford.associative",
                (u * v) * w == u * (v * w),
                {"dim": dim, "u": str(u), "v": str(v), "w": str(w)},
            )
            total = Multivector.zero(dim)
            for k in range(dim + 1):
                total = total + mv_grade(u, k)
            ctx.check("clifford.grade_partition", total == u, {"dim": dim, "u": str(u)})
        for _ in range(max(1, ctx.samples // 10)):
            coords = ctx.coords(dim)
            x = mv_from_vector(coords)
            norm2 = sum((c * c for c in coords), Fraction(0))
            ctx.check("clifford.vector_square", x * x == Multivector.scalar(-norm2, dim), {"dim": dim})


def suite_tensor_laws(ctx: SuiteContext) -> None:
    dim = 8
    for a in range(8):
        for b in range(8):
            e_a, e_b = Octonion.basis(a), Octonion.basis(b)
            lhs = tens_product(TensorElement.from_octonion(e_a, dim), TensorElement.from_octonion(e_b, dim))
            ctx.check(
                "tensor.octonion_factor",
                lhs == TensorElement.from_octonion(oct_mul(e_a, e_b), dim),
                {"a": a, "b": b},
            )
    e = [TensorElement.from_octonion(Octonion.basis(i), dim) for i in range(8)]
    ctx.check("tensor.non_associative", tens_product(tens_product(e[1], e[2]), e[4]) != tens_product(e[1], tens_product(e[2], e[4])))
    example = tens_product(TensorElement.term(1, [0], dim), TensorElement.term(2, [1], dim))
    ctx.check("tensor.factorwise_product", example == TensorElement.term(3, [0, 1], dim))
    for _ in range(ctx.samples):
        s, t, u = ctx.tensor(dim), ctx.tensor(dim), ctx.tensor(dim)
        q = ctx.rational()
        inputs = {"s": str(s), "t": str(t), "u": str(u)}
        ctx.check("tensor.left_distributive", tens_product(s, t + u) == tens_product(s, t) + tens_product(s, u), inputs)
        ctx.check("tensor.right_distributive", tens_product(s + t, u) == tens_product(s, u) + tens_product(t, u), inputs)
        ctx.check("tensor.bilinear", tens_product(s.scale(q), t) == tens_product(s, t).scale(q) == tens_product(s, t.scale(q)), inputs)
        p, r, w = ctx.tensor(dim, real=True), ctx.tensor(dim, real=True), ctx.tensor(dim, real=True)
        ctx.check(
            "tensor.real_associative",
            tens_product(tens_product(p, r), w) == tens_product(p, tens_product(r, w)),
            {"p": str(p), "r": str(r), "w": str(w)},
        )
    for n in range(2, ctx.n_max + 1):
        mdim = 8 * n
        first = MultiTensorElement(mdim, {1 << 8: MultiOctonion.basis(1, 1, n)}, n)
        second = MultiTensorElement(mdim, {1 << 9: MultiOctonion.basis(1, 2, n)}, n)
        expected = MultiTensorElement(mdim, {(1 << 8) | (1 << 9): MultiOctonion.basis(1, 3, n)}, n)
        ctx.check("tensor.multi_slotwise", multi_tens_product(first, second) == expected, {"n": n})
        cross = multi_tens_product(
            MultiTensorElement(mdim, {0: MultiOctonion.basis(0, 1, n)}, n),
            MultiTensorElement(mdim, {0: MultiOctonion.basis(1, 1, n)}, n),
        )
        ctx.check("tensor.multi_cross_slot_zero", cross.is_zero(), {"n": n})
        unit = MultiTensorElement.from_multi_octonion(MultiOctonion.unit(n))
        probe = MultiTensorElement(mdim, {1 << 3: MultiOctonion.basis(n - 1, 5, n, 2)}, n)
        ctx.check("tensor.multi_unit", multi_tens_product(unit, probe) == probe == multi_tens_product(probe, unit), {"n": n})


def suite_involution_group(ctx: SuiteContext) -> None:
    for j in range(8):
        ctx.check("involutions.derivation_consistent", derivation_consistent(j), {"j": j})
        ctx.check("involutions.automorphism", is_automorphism_on_basis(j), {"j": j})
        ctx.check("involutions.phi_invariant", phi_invariance(j), {"j": j})
        ctx.check("involutions.fixes_one", sign_row(j)[0] == 1, {"j": j})
        for i in range(8):
            ctx.check("involutions.group_law", compose_maps_agree(i, j), {"i": i, "j": j})
            expected = 0 if i == 0 else (1 if bin(i & j).count("1") % 2 == 0 else 0)
            ctx.check("involutions.sigma", sigma(j, i) == expected, {"j": j, "i": i}, expected, sigma(j, i))
        x = ctx.octonion()
        ctx.check("involutions.involutive", j_apply(j, j_apply(j, x)) == x, {"j": j, "x": str(x)})
    ctx.check("involutions.sigma_row0", [sigma(0, i) for i in range(8)] == [0] + [1] * 7)
    distinct = {sign_row(j) for j in range(8)}
    ctx.check("involutions.eight_distinct", len(distinct) == 8, actual=len(distinct))


def suite_projections(ctx: SuiteContext) -> None:
    for i in range(8):
        for a in range(8):
            value = project_coefficient(i, Octonion.basis(a))
            ctx.check("projections.octonion_basis", value == (1 if a == i else 0), {"i": i, "a": a}, actual=value)
    for _ in range(ctx.samples):
        x = ctx.octonion()
        ctx.check("projections.real_part", real_part_by_averaging(x) == x[0], {"x": str(x)})
        for i in range(8):
            ctx.guard("projections.octonion", lambda: project_coefficient(i, x) == x[i], {"i": i, "x": str(x)})
    dim = 8
    for a in range(8):
        for mask in range(1 << dim):
            p = TensorElement(dim, {mask: Octonion.basis(a)})
            g_b = Multivector(dim, {mask: 1})
            for i in range(8):
                expected = g_b if i == a else Multivector.zero(dim)
                ctx.guard(
                    "projections.tensor_spanning",
                    lambda: project_tensor_coefficient(i, p) == expected,
                    {"i": i, "a": a, "blade": blade_indices(mask)},
                )
    for _ in range(ctx.samples):
        p = ctx.tensor(dim, terms=3)
        rebuilt = TensorElement.zero(dim)
        for i in range(8):
            rebuilt = rebuilt + tens_product(
                TensorElement.from_octonion(Octonion.basis(i), dim),
                TensorElement.from_multivector(project_tensor_coefficient(i, p)),
            )
        ctx.check("projections.tensor_reconstruct", rebuilt == p, {"p": str(p)})


def _signed_var(entry: Tuple[int, int]) -> str:
    sign, var = entry
    return f"{'+' if sign > 0 else '-'}x{var}"


def suite_witt_tables(ctx: SuiteContext) -> None:
    computed = witt_sign_table()
    for i in range(8):
        for m in range(8):
            ctx.check(
                "witt_tables.witt_printed",
                computed[i][m] == PRINTED_WITT_SIGNS[i][m],
                {"f": i, "m": m},
                PRINTED_WITT_SIGNS[i][m],
                computed[i][m],
            )
    for n in range(2, ctx.n_max + 1):
        for block in range(n):
            ctx.check("witt_tables.witt_block_shift", witt_sign_table(n, block) == computed, {"n": n, "block": block})
    twistor = twistor_sign_table()
    errata = []
    for i in range(8):
        for m in range(8):
            printed = PRINTED_TWISTOR_ROWS[i][m]
            if (i, m) in PRINTED_ERRATA:
                corrected = PRINTED_ERRATA[(i, m)]
                ok = twistor[i][m] == corrected and corrected != printed
                errata.append(
                    {
                        "row": f"X{i}",
                        "column": f"g{m}",
                        "printed": _signed_var(printed),
                        "computed": _signed_var(twistor[i][m]),
                    }
                )
            else:
                ok = twistor[i][m] == printed
            ctx.check(
                "witt_tables.twistor_printed",
                ok,
                {"X": i, "m": m},
                _signed_var(printed),
                _signed_var(twistor[i][m]),
            )
    ctx.observations["printed_twistor_errata"] = errata
    hermitian = hermitian_sign_table()
    for i in range(8):
        for j in range(8):
            ctx.check(
                "witt_tables.hermitian_printed",
                hermitian[i][j] == PRINTED_HERMITIAN_SIGNS[i][j],
                {"Z": i, "j": j},
                PRINTED_HERMITIAN_SIGNS[i][j],
                hermitian[i][j],
            )
    ctx.check("witt_tables.z0_structure", z0_matches_twistor_sum())


def _blocks(n_max: int):
    for n in range(1, n_max + 1):
        for block in range(n):
            yield n, block


def suite_twistor_frames(ctx: SuiteContext) -> None:
    for n, block in _blocks(ctx.n_max):
        bad = formal_twistor_anticommutation(block, n)
        ctx.check("twistor_frames.formal_anticommutation", not bad, {"n": n, "block": block}, [], bad)
    for _ in range(ctx.samples):
        coords = ctx.coords(8)
        frame = twistor_vectors(coords)
        ctx.check("twistor_frames.x0_is_x", frame.vectors[0] == tuple(coords), {"x": coords})
        record = twistor_anticommutation(coords)
        ctx.check("twistor_frames.clifford", not record.failures, {"x": coords}, [], record.failures)
        ctx.check("twistor_frames.gram", not record.gram_failures, {"x": coords}, [], record.gram_failures)


def suite_round_trips(ctx: SuiteContext) -> None:
    for n, block in _blocks(ctx.n_max):
        failures = formal_round_trip(block, n)
        ctx.check("round_trips.formal", not failures, {"n": n, "block": block}, [], failures)
    for n, block in _blocks(ctx.n_max):
        for _ in range(ctx.samples):
            coords = ctx.coords(8)
            inputs = {"n": n, "block": block, "x": coords}
            frame = twistor_vectors(coords, block, n)
            ctx.guard(
                "round_trips.x_to_z",
                lambda: hermitian_from_twistor(frame).variables == hermitian_variables(coords, block, n).variables,
                inputs,
            )
            ctx.guard(
                "round_trips.z_to_x",
                lambda: twistor_from_hermitian(hermitian_variables(coords, block, n)) == frame,
                inputs,
            )
            ctx.guard(
                "round_trips.multi_z_to_x",
                lambda: twistor_from_hermitian(hermitian_variables_multi(coords, block, n)) == frame,
                inputs,
            )


def suite_vector_anticommutation(ctx: SuiteContext) -> None:
    for n, block in _blocks(ctx.n_max):
        for _ in range(ctx.samples):
            coords = ctx.coords(8)
            record = twistor_anticommutation(coords, block, n)
            ctx.check(
                "vector_anticommutation.clifford",
                not record.failures,
                {"n": n, "block": block, "x": coords},
                [],
                record.failures,
            )
    for n in range(2, ctx.n_max + 1):
        for _ in range(max(1, ctx.samples // 20)):
            coords = ctx.coords(8 * n)
            bad = cross_block_anticommutators(coords, n)
            ctx.check("vector_anticommutation.cross_block", not bad, {"n": n, "x": coords}, [], bad)


def suite_operator_identities(ctx: SuiteContext) -> None:
    for n in range(1, ctx.n_max + 1):
        nvars = 8 * n
        d = dirac(nvars)
        ctx.guard(
            "operators.dirac_square",
            lambda: op_equal(op_anticommutator(d, d), laplacian(nvars, factor=-2)),
            {"n": n},
        )
        x0 = Polynomial.variable(0, nvars)
        g0 = Polynomial.constant(TensorElement.from_multivector(Multivector.generator(0, nvars)), nvars)
        ctx.check("operators.dirac_on_x0", op_apply(d, x0) == g0, {"n": n})
        composed = op_compose_apply(d, d, sum_of_squares(nvars)).scale(2)
        expected = Polynomial.constant(TensorElement.from_octonion(Octonion.scalar(-32 * n), nvars), nvars)
        ctx.check("operators.laplacian_on_norm", composed == expected, {"n": n})
        for block in range(n):
            twistors = [twistor_derivative(i, block, n) for i in range(8)]
            block_lap = laplacian(nvars, block, factor=-2)
            zero = laplacian(nvars, block, factor=0)
            ctx.check("operators.twistor0_is_dirac", twistors[0] == block_dirac(block, n), {"n": n, "block": block})
            for i in range(8):
                for j in range(8):
                    value = op_anticommutator(twistors[i], twistors[j])
                    inputs = {"n": n, "block": block, "i": i, "j": j}
                    if i == j:
                        ctx.guard("operators.twistor_clifford", lambda: op_equal(value, block_lap), inputs)
                    else:
                        ctx.check("operators.twistor_clifford", value == zero, inputs)
            total = None
            for i in range(8):
                inputs = {"n": n, "block": block, "i": i}
                via_witt, via_twistor = hermitian_derivative_routes(i, block, n)
                ctx.check("operators.hermitian_routes", via_witt == via_twistor, inputs)
                ctx.guard("operators.hermitian_derivative", lambda: not hermitian_derivative(i, block, n).is_zero(), inputs)
                total = via_witt if total is None else total + via_witt
            ctx.check("operators.hermitian_mean", total.scale(Fraction(1, 8)) == block_dirac(block, n), {"n": n, "block": block})
            for _ in range(min(ctx.samples, 20) if n == 1 else min(ctx.samples, 5)):
                i, j = ctx.rng.randrange(8), ctx.rng.randrange(8)
                p = ctx.polynomial(nvars)
                lhs = op_apply(op_anticommutator(twistors[i], twistors[j]), p)
                rhs = op_compose_apply(twistors[i], twistors[j], p) + op_compose_apply(twistors[j], twistors[i], p)
                ctx.check("operators.action_consistent", lhs == rhs, {"n": n, "block": block, "i": i, "j": j})
    nvars = 8
    for _ in range(max(1, ctx.samples // 10)):
        p = ctx.polynomial(nvars).map_coefficients(lambda c: TensorElement.from_multivector(c.real_part().grade(0)))
        q = ctx.polynomial(nvars).map_coefficients(lambda c: TensorElement.from_multivector(c.real_part().grade(0)))
        k = ctx.rng.randrange(nvars)
        ctx.check(
            "operators.leibniz",
            (p * q).derivative(k) == p.derivative(k) * q + p * q.derivative(k),
            {"k": k},
        )
        a, b = ctx.rational(), ctx.rational()
        ctx.check(
            "operators.linear",
            (p.scale(a) + q.scale(b)).derivative(k) == p.derivative(k).scale(a) + q.derivative(k).scale(b),
            {"k": k},
        )


def _witt_product_summary(n: int) -> Dict[str, Any]:
    table = witt_product_table(witt_basis(n))
    squares = [str(table[i][i]) for i in range(8)]
    anticommuting = [
        [i, j] for i in range(8) for j in range(i + 1, 8) if (table[i][j] + table[j][i]).is_zero()
    ]
    return {"squares": squares, "anticommuting_pairs": anticommuting}


def suite_witt_decomposition(ctx: SuiteContext) -> None:
    literal: Dict[str, List[int]] = {}
    for n in range(1, max(ctx.n_max, DECOMPOSITION_MIN_BLOCKS) + 1):
        ctx.check("witt_decomposition.zero", witt_decompose([0] * (8 * n), n).exact, {"n": n})
        for _ in range(ctx.samples):
            coords = ctx.coords(8 * n)
            inputs = {"n": n, "x": coords}
            ctx.guard("witt_decomposition.exact", lambda: witt_decompose(coords, n, strict=False).exact, inputs)
            ctx.guard("witt_decomposition.multi_exact", lambda: witt_decompose_multi(coords, n, strict=False).exact, inputs)
        if n > ctx.n_max:
            continue
        for label, basis in (("plain", witt_basis(n)), ("multi", witt_basis_multi(n))):
            matches = []
            for k in range(n):
                for i in range(8):
                    try:
                        expression = express_generator(i, k, basis)
                    except OctowittError as exc:
                        ctx.check("witt_decomposition.express_generator", False, {"n": n, "k": k, "i": i, "basis": label}, actual=str(exc))
                        continue
                    ctx.check("witt_decomposition.express_generator", True)
                    if expression.literal_matches:
                        matches.append(8 * k + i)
            literal[f"n={n},{label}"] = matches
    ctx.observations["generator_literal_left_factor_matches"] = literal
    ctx.observations["witt_products_n1"] = _witt_product_summary(1)


Suite = Callable[[SuiteContext], None]

SUITES: Tuple[Tuple[str, Suite], ...] = (
    ("octonion_laws", suite_octonion_laws),
    ("clifford_laws", suite_clifford_laws),
    ("tensor_laws", suite_tensor_laws),
    ("involution_group", suite_involution_group),
    ("projections", suite_projections),
    ("witt_tables", suite_witt_tables),
    ("twistor_frames", suite_twistor_frames),
    ("round_trips", suite_round_trips),
    ("vector_anticommutation", suite_vector_anticommutation),
    ("operator_identities", suite_operator_identities),
    ("witt_decomposition", suite_witt_decomposition),
)


def _failure_key(failure: CheckFailure) -> Tuple[str, str]:
    return failure.check, json.dumps(failure.inputs, sort_keys=True, ensure_ascii=False)


def run_verification(
    n_max: int,
    samples: int,
    seed: int,
    sample_bound: int = 100,
    timings: bool = True,
    only: Optional[Sequence[str]] = None,
) -> VerificationReport:
    """Run the suites in order and assemble a deterministic report."""
    config = VerificationConfig(n_max=n_max, samples=samples, seed=seed, sample_bound=sample_bound)
    observations: Dict[str, Any] = {}
    results = []
    for index, (name, suite) in enumerate(SUITES):
        if only is not None and name not in only:
            continue
        ctx = SuiteContext(
            name=name,
            rng=random.Random(seed * 1009 + index),
            n_max=n_max,
            samples=samples,
            bound=sample_bound,
            observations=observations,
        )
        logger.info("suite %s started", name)
        start = time.perf_counter()
        try:
            suite(ctx)
        except OctowittError as exc:
            logger.exception("suite %s aborted", name)
            ctx.check(f"{name}.aborted", False, expected="completion", actual=str(exc))
        elapsed = time.perf_counter() - start
        logger.info("suite %s: %d checks, %d failures, %.3fs", name, ctx.checks_run, len(ctx.failures), elapsed)
        results.append(
            SuiteResult(
                name=name,
                checks_run=ctx.checks_run,
                failures=sorted(ctx.failures, key=_failure_key),
                wall_time=round(elapsed, 6) if timings else None,
            )
        )
    return VerificationReport(
        config=config,
        suites=results,
        passed=all(r.passed for r in results),
        observations=observations,
    )
