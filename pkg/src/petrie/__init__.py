"""Exact similarity analysis of permutations through their interval
transition matrices: extension operators, bounded similarity deciders,
and constructive conjugacy certificates."""

from .errors import (
    AdmissibilityError,
    ClauseViolationError,
    DegreeMismatchError,
    EigenvalueOneError,
    ParseError,
    PetrieError,
    SingularMatrixError,
    SpecError,
    VerificationError,
)
from .exact import (
    GF2Matrix,
    IntMatrix,
    IntPoly,
    QMatrix,
    RatPoly,
    charpoly,
    det,
    gf2_mul,
    invariant_factors,
    is_invertible_q,
    mat_mul,
    minpoly,
    similar,
    solve_rational,
    trace,
)
from .extensions import (
    LeftExtensionSpec,
    RightExtensionSpec,
    TwoSidedExtensionSpec,
    decompose_left,
    decompose_right,
    decompose_two_sided,
    enumerate_synchronized_left,
    enumerate_synchronized_right,
    enumerate_synchronized_two_sided,
    left_extend,
    right_extend,
    two_sided_extend,
)
from .perms import (
    Permutation,
    StepMap,
    compose,
    cycle_chain,
    dual,
    family_cor11,
    family_sigma_nk,
    family_thm4_combine,
    family_thm12,
    family_thm13,
    is_cyclic,
    parse_permutation,
)
from .similarity import (
    ClassificationReport,
    Verdict,
    check_pair,
    classify,
    refute,
)
from .transition import (
    BasisMatrix,
    IntervalVector,
    basis_matrix,
    export_digraph,
    interval_element,
    is_petrie,
    petrie_matrix,
    petrie_matrix_gf2,
    phi_apply,
)

__version__ = "0.1.0"
