# -*- coding: utf-8 -*-
"""
Exact algebra layer: octonions, Clifford algebras and their tensor products.
"""

from .octonion import (
    FANO_TRIPLES,
    Octonion,
    associator,
    basis_mul,
    oct_conj,
    oct_inner,
    oct_mul,
    phi_inverse,
    phi_map,
    to_fraction,
)
from .clifford import (
    Multivector,
    blade_indices,
    blade_mask,
    blade_product,
    mv_anticommutator,
    mv_from_vector,
    mv_grade,
    mv_product,
)
from .tensor import (
    MultiOctonion,
    MultiTensorElement,
    TensorElement,
    embed_vector,
    multi_embed,
    multi_oct_left_mul,
    multi_oct_right_mul,
    multi_tens_product,
    oct_left_mul,
    oct_right_mul,
    tens_product,
)

__all__ = [
    # Octonions
    "FANO_TRIPLES",
    "Octonion",
    "associator",
    "basis_mul",
    "oct_conj",
    "oct_inner",
    "oct_mul",
    "phi_inverse",
    "phi_map",
    "to_fraction",
    # Clifford
    "Multivector",
    "blade_indices",
    "blade_mask",
    "blade_product",
    "mv_anticommutator",
    "mv_from_vector",
    "mv_grade",
    "mv_product",
    # Tensor
    "MultiOctonion",
    "MultiTensorElement",
    "TensorElement",
    "embed_vector",
    "multi_embed",
    "multi_oct_left_mul",
    "multi_oct_right_mul",
    "multi_tens_product",
    "oct_left_mul",
    "oct_right_mul",
    "tens_product",
]
