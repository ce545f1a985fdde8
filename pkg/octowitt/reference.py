# -*- coding: utf-8 -*-
"""
Published sign tables for one block (n = 1), transcribed as literal data.

* ``PRINTED_WITT_SIGNS[i][m]``: sign of ``e_m g_m`` in ``f_i``.
* ``PRINTED_TWISTOR_ROWS[i][m]``: ``(sign, l)`` with ``X_i`` carrying
  ``sign · x_l`` on ``g_m``.
* ``PRINTED_HERMITIAN_SIGNS[i][j]``: sign of ``e_j X_j`` in ``Z_i``.

``PRINTED_ERRATA`` maps ``(i, m)`` of a printed entry known to be wrong to the
value that orthogonality of the frame forces.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

SignedVariable = Tuple[int, int]

PRINTED_WITT_SIGNS: List[List[int]] = [
    [+1, -1, -1, -1, -1, -1, -1, -1],
    [+1, +1, -1, +1, -1, +1, -1, +1],
    [+1, -1, +1, +1, -1, -1, +1, +1],
    [+1, +1, +1, -1, -1, +1, +1, -1],
    [+1, -1, -1, -1, +1, +1, +1, +1],
    [+1, +1, -1, +1, +1, -1, +1, -1],
    [+1, -1, +1, +1, +1, +1, -1, -1],
    [+1, +1, +1, -1, +1, -1, -1, +1],
]

PRINTED_TWISTOR_ROWS: List[List[SignedVariable]] = [
    [(+1, 0), (+1, 1), (+1, 2), (+1, 3), (+1, 4), (+1, 5), (+1, 6), (+1, 7)],
    [(+1, 1), (-1, 0), (-1, 3), (+1, 2), (-1, 5), (+1, 4), (+1, 7), (-1, 6)],
    [(+1, 2), (+1, 3), (-1, 0), (-1, 1), (-1, 6), (-1, 7), (+1, 4), (+1, 5)],
    [(+1, 3), (-1, 2), (+1, 1), (-1, 0), (-1, 7), (+1, 6), (-1, 5), (+1, 4)],
    [(+1, 4), (+1, 5), (+1, 6), (+1, 7), (-1, 0), (-1, 1), (-1, 2), (-1, 3)],
    [(+1, 5), (-1, 4), (+1, 7), (-1, 6), (+1, 1), (-1, 0), (+1, 3), (-1, 2)],
    [(+1, 6), (-1, 7), (-1, 4), (+1, 5), (-1, 2), (-1, 3), (-1, 0), (+1, 1)],
    [(+1, 7), (+1, 6), (-1, 5), (-1, 4), (+1, 3), (+1, 2), (-1, 1), (-1, 0)],
]

# X_6 on g_4 is printed as -x_2; X_4 ⟂ X_6 and e_2 e_6 = -e_4 force +x_2.
PRINTED_ERRATA: Dict[Tuple[int, int], SignedVariable] = {(6, 4): (+1, 2)}

PRINTED_HERMITIAN_SIGNS: List[List[int]] = [
    [+1, +1, +1, +1, +1, +1, +1, +1],
    [+1, -1, +1, -1, +1, -1, +1, -1],
    [+1, +1, -1, -1, +1, +1, -1, -1],
    [+1, -1, -1, +1, +1, -1, -1, +1],
    [+1, +1, +1, +1, -1, -1, -1, -1],
    [+1, -1, +1, -1, -1, +1, -1, +1],
    [+1, +1, -1, -1, -1, -1, +1, +1],
    [+1, -1, -1, +1, -1, +1, +1, -1],
]


def corrected_twistor_rows() -> List[List[SignedVariable]]:
    rows = [list(row) for row in PRINTED_TWISTOR_ROWS]
    for (i, m), entry in PRINTED_ERRATA.items():
        rows[i][m] = entry
    return rows
