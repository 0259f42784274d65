"""macjack: exact engine for generalized Macdonald and Jack symmetric functions.

The package builds, over exact rational-function coefficient fields, the
triangular operator whose eigenfunctions generalize the Macdonald symmetric
functions to N colors, its q -> 1 differential-operator degeneration whose
eigenfunctions generalize the Jack functions, the eigenfunction families
themselves (with their duals), their orthogonality, and the numeric limit
connecting the two worlds.
"""

from .field import (
    DEFAULT_DPS,
    FieldError,
    NumericPoint,
    PoleError,
    Poly,
    RationalFunction,
    Ring,
    parse_rational,
    pretty,
)
from .partitions import (
    OrderResult,
    compare_L,
    compare_R,
    enumerate_multipartitions,
    mp_from_json,
    mp_to_json,
    mp_weight,
    total_order,
)
from .symspace import (
    BasisKind,
    DegreeMismatchError,
    GramMatrix,
    SymmetricElement,
    gram,
    scalar_product,
)
from .operators import (
    OperatorMatrix,
    VertexOpSpec,
    apply_vertex_product,
    build_H012,
    build_Hbeta,
    build_X0,
    build_adjoint,
    eigenvalue_macdonald,
    lambda_tilde,
)
from .eigen import (
    DegeneracyError,
    EigenKind,
    JACK_J,
    JACK_J_STAR,
    MACDONALD_P,
    MACDONALD_P_STAR,
    TransitionTable,
    eigenfunction,
    jack_limit_check,
    kind_by_name,
    transition_table,
)
from .verify import (
    Report,
    verify_eigen,
    verify_limit,
    verify_nondegeneracy,
    verify_orthogonality,
    verify_triangularity,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_DPS",
    "FieldError",
    "NumericPoint",
    "PoleError",
    "Poly",
    "RationalFunction",
    "Ring",
    "parse_rational",
    "pretty",
    "OrderResult",
    "compare_L",
    "compare_R",
    "enumerate_multipartitions",
    "mp_from_json",
    "mp_to_json",
    "mp_weight",
    "total_order",
    "BasisKind",
    "DegreeMismatchError",
    "GramMatrix",
    "SymmetricElement",
    "gram",
    "scalar_product",
    "OperatorMatrix",
    "VertexOpSpec",
    "apply_vertex_product",
    "build_H012",
    "build_Hbeta",
    "build_X0",
    "build_adjoint",
    "eigenvalue_macdonald",
    "lambda_tilde",
    "DegeneracyError",
    "EigenKind",
    "JACK_J",
    "JACK_J_STAR",
    "MACDONALD_P",
    "MACDONALD_P_STAR",
    "TransitionTable",
    "eigenfunction",
    "jack_limit_check",
    "kind_by_name",
    "transition_table",
    "Report",
    "verify_eigen",
    "verify_limit",
    "verify_nondegeneracy",
    "verify_orthogonality",
    "verify_triangularity",
    "__version__",
]
