# -*- coding: utf-8 -*-
"""
Table builders for ``octowitt tables``.

Every builder returns a :class:`Table` holding a JSON payload (sign matrices
as plain integer lists) and a pandas frame used for the text rendering.
Formal-coordinate tables use the symbols x_0 ... x_{8n-1}.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List

import numpy as np
import pandas as pd

from .algebra.octonion import FANO_TRIPLES, basis_mul
from .codec import dumps, encode_element
from .errors import IndexRangeError
from .formal import hermitian_sign_table, twistor_sign_table, witt_sign_table
from .involutions import jsign_table, sigma_table
from .witt import witt_basis, witt_product_table

logger = logging.getLogger(__name__)

TABLE_KINDS = ("fano", "octonion-mul", "sigma", "jsigns", "witt", "twistor", "hermitian", "witt-products")


@dataclass(frozen=True)
class Table:
    kind: str
    title: str
    payload: Dict[str, Any]
    frame: pd.DataFrame


def _sign(value: int) -> str:
    return "+" if value > 0 else "-"


def _signed_basis(sign: int, k: int) -> str:
    return f"{_sign(sign)}e{k}"


def _fano(n: int) -> Table:
    frame = pd.DataFrame(list(FANO_TRIPLES), columns=["a", "b", "c"])
    frame.index = [f"e{a}e{b}=e{c}" for a, b, c in FANO_TRIPLES]
    return Table("fano", "oriented triples of φ", {"triples": [list(t) for t in FANO_TRIPLES]}, frame)


def _octonion_mul(n: int) -> Table:
    cells = [[_signed_basis(*basis_mul(i, j)) for j in range(8)] for i in range(8)]
    frame = pd.DataFrame(cells, index=[f"e{i}" for i in range(8)], columns=[f"e{j}" for j in range(8)])
    return Table("octonion-mul", "e_i e_j", {"products": cells}, frame)


def _matrix_table(kind: str, title: str, matrix: np.ndarray, row: str, col: str) -> Table:
    frame = pd.DataFrame(matrix, index=[f"{row}{j}" for j in range(8)], columns=[f"{col}{i}" for i in range(8)])
    return Table(kind, title, {"matrix": matrix.tolist()}, frame)


def _sigma(n: int) -> Table:
    return _matrix_table("sigma", "σ(j, i): J_j(conj e_i) = (-1)^σ e_i", sigma_table(), "j", "i")


def _jsigns(n: int) -> Table:
    return _matrix_table("jsigns", "J_j(e_i) / e_i", jsign_table(), "J", "e")


def _witt(n: int) -> Table:
    blocks = [np.array(witt_sign_table(n, k), dtype=np.int8) for k in range(n)]
    rows = []
    index = []
    for k, signs in enumerate(blocks):
        for i in range(8):
            index.append(f"f{i}" if n == 1 else f"f{i}^{k}")
            rows.append([f"{_signed_basis(int(signs[i][m]), m)} g{8 * k + m}" for m in range(8)])
    frame = pd.DataFrame(rows, index=index, columns=[f"m={m}" for m in range(8)])
    payload = {"n": n, "signs": [b.tolist() for b in blocks]}
    return Table("witt", "f_i = J_i(Ω): sign of e_m g_m", payload, frame)


def _twistor(n: int) -> Table:
    rows_data = twistor_sign_table()
    signs = np.array([[s for s, _ in row] for row in rows_data], dtype=np.int8)
    variables = np.array([[v for _, v in row] for row in rows_data], dtype=np.int8)
    index = []
    rows = []
    for k in range(n):
        for i in range(8):
            index.append(f"X{i}" if n == 1 else f"X{i}^{k}")
            rows.append([f"{_sign(int(signs[i][m]))}x{8 * k + int(variables[i][m])}" for m in range(8)])
    frame = pd.DataFrame(rows, index=index, columns=[f"g{m}" for m in range(8)])
    payload = {"n": n, "signs": signs.tolist(), "variables": variables.tolist()}
    return Table("twistor", "X_i = Φ⁻¹(Φ(X) conj e_i): coefficient of g_m", payload, frame)


def _hermitian(n: int) -> Table:
    signs = np.array(hermitian_sign_table(), dtype=np.int8)
    index = []
    rows = []
    for k in range(n):
        for i in range(8):
            index.append(f"Z{i}" if n == 1 else f"Z{i}^{k}")
            suffix = "" if n == 1 else f"^{k}"
            rows.append([f"{_signed_basis(int(signs[i][j]), j)} X{j}{suffix}" for j in range(8)])
    frame = pd.DataFrame(rows, index=index, columns=[f"j={j}" for j in range(8)])
    return Table("hermitian", "Z_i = Σ_j J_i(e_j) X_j", {"n": n, "signs": signs.tolist()}, frame)


def _witt_products(n: int) -> Table:
    table = witt_product_table(witt_basis(n))
    cells = [[str(table[i][j]) for j in range(8)] for i in range(8)]
    frame = pd.DataFrame(cells, index=[f"f{i}" for i in range(8)], columns=[f"f{j}" for j in range(8)])
    payload = {"n": n, "products": [[encode_element(table[i][j]) for j in range(8)] for i in range(8)]}
    return Table("witt-products", "f_i f_j (block 0)", payload, frame)


_BUILDERS: Dict[str, Callable[[int], Table]] = {
    "fano": _fano,
    "octonion-mul": _octonion_mul,
    "sigma": _sigma,
    "jsigns": _jsigns,
    "witt": _witt,
    "twistor": _twistor,
    "hermitian": _hermitian,
    "witt-products": _witt_products,
}


def build_table(kind: str, n: int = 1) -> Table:
    if kind not in _BUILDERS:
        raise IndexRangeError(f"unknown table {kind!r}; choose from {', '.join(TABLE_KINDS)}")
    if n < 1:
        raise IndexRangeError(f"block count must be at least 1, got {n}")
    logger.info("building table %s (n=%d)", kind, n)
    return _BUILDERS[kind](n)


def render_table(table: Table, fmt: str = "json") -> str:
    if fmt == "json":
        return dumps({"kind": table.kind, "title": table.title, **table.payload})
    if fmt == "text":
        return f"# {table.title}\n{table.frame.to_string()}"
    raise IndexRangeError(f"unknown format {fmt!r}")


def table_kinds() -> List[str]:
    return list(TABLE_KINDS)
