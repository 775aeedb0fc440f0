"""Finite-ring construction and clean/nil-clean/J-clean classification."""

from .cleanness import (
    Decomposition,
    ElementClassification,
    RingReport,
    classify_element,
    classify_ring,
    clean_decompositions,
    j_clean_decompositions,
    nil_clean_decompositions,
    ring_flag,
)
from .dsl import ParseError, build_from_text, build_ring, parse_ring_expr, render
from .errors import (
    CleanRingsError,
    ImproperIdealError,
    InvalidArgumentError,
    InvalidEndomorphismError,
    InvalidIdealError,
    InvalidSizeError,
    NotCleanError,
    PreconditionError,
    SizeCapError,
    UnsupportedCharacteristicError,
)
from .rings import (
    DEFAULT_SIZE_CAP,
    Endomorphism,
    FiniteRing,
    NonUnitalAlgebra,
    adjoin_unity,
    algebra_from_ideal,
    check_algebra_axioms,
    check_endomorphism,
    check_ring_axioms,
    make_boolean,
    make_matrix_ring,
    make_product,
    make_quotient,
    make_trunc_skew_poly,
    make_ut_ring,
    make_zmod,
    matrix_algebra,
    poly_nil_algebra,
    strictly_upper_algebra,
)
from .structure import (
    ConjugacyCertificate,
    Ideal,
    UnitGroup,
    are_conjugate,
    check_split,
    conjugacy_classes,
    ideal_closure,
    idempotents,
    is_abelian,
    jacobson_radical,
    lift_idempotent,
    nilpotency_index,
    nilpotent_mask,
    two_sided_annihilator,
    units,
)
from .verification import ALL_CASES, CaseResult, VerificationCase, build_fleet, run_cases

__version__ = "0.1.0"
