"""
octowitt: exact octonionic Witt bases over 𝕆⊗Cl_{8n}.
"""

from .algebra import (
    MultiOctonion,
    MultiTensorElement,
    Multivector,
    Octonion,
    TensorElement,
    oct_mul,
    tens_product,
)
from .diffops import (
    Polynomial,
    dirac,
    hermitian_derivative,
    op_anticommutator,
    op_apply,
    op_equal,
    twistor_derivative,
)
from .errors import (
    CodecError,
    DimensionMismatchError,
    IdentityDefect,
    IndexRangeError,
    OctowittError,
)
from .involutions import j_apply, j_apply_tensor, project_coefficient, sigma
from .witt import (
    express_generator,
    hermitian_variables,
    twistor_from_hermitian,
    twistor_vectors,
    witt_basis,
    witt_basis_multi,
    witt_decompose,
    witt_decompose_multi,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # Algebra
    "MultiOctonion",
    "MultiTensorElement",
    "Multivector",
    "Octonion",
    "TensorElement",
    "oct_mul",
    "tens_product",
    # Involutions
    "j_apply",
    "j_apply_tensor",
    "project_coefficient",
    "sigma",
    # Witt
    "express_generator",
    "hermitian_variables",
    "twistor_from_hermitian",
    "twistor_vectors",
    "witt_basis",
    "witt_basis_multi",
    "witt_decompose",
    "witt_decompose_multi",
    # Operators
    "Polynomial",
    "dirac",
    "hermitian_derivative",
    "op_anticommutator",
    "op_apply",
    "op_equal",
    "twistor_derivative",
    # Errors
    "CodecError",
    "DimensionMismatchError",
    "IdentityDefect",
    "IndexRangeError",
    "OctowittError",
]
