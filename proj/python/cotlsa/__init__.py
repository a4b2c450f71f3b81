"""Exact left-symmetric and symplectic structures on cotangent Lie algebras.

Scalars cross the boundary as :class:`fractions.Fraction`; ints and
``"p/q"`` strings are accepted on input.
"""

from ._core import (  # noqa: F401
    AxiomsNotVerified,
    CotlsaError,
    ConditionViolation,
    Degenerate,
    DimensionMismatch,
    IntegerLambda,
    LieAlgebra,
    LsaProduct,
    NotClosed,
    ParseError,
    SizeTooSmall,
    TwoForm,
    ZeroLambdaI,
    build_case_ii_iso,
    build_case_ii_symplecto,
    build_delta,
    build_omega_lambda,
    build_tg,
    center_dim,
    check_closed,
    check_complete,
    check_conditions,
    check_gamma_complement,
    check_induced_identity,
    check_induced_matches_family,
    check_jacobi,
    check_left_hom,
    check_left_symmetric,
    compute_sequences,
    in_set_A,
    in_set_B,
    induce_lsa,
    is_nondegenerate,
    lower_central_series_dims,
    lsa_equivalence_predicate,
    nilpotency_step,
    parse_artifact,
    pullback,
    run_cli,
    symplectic_equivalence_predicate,
    verify_homothety,
    verify_lsa_isomorphism,
)

__version__ = "0.1.0"
