"""Exact algebra of DNA-style insertion products on words."""

from .coefficients import ONE, T, ZERO, Coefficient, format_coefficient, parse_coefficient
from .errors import (
    AlphabetMismatch,
    BoundTooLarge,
    InadmissibleInput,
    InsertAlgError,
    OutOfDomain,
    PositionOutOfRange,
    SearchSpaceTooLarge,
    UnknownLetter,
)
from .identities import (
    IdentityKind,
    IdentityReport,
    associator,
    audit_adjacency_theorem,
    check_identity,
    identity_defect,
)
from .operations import (
    AdjacencyRelation,
    InsertionOperator,
    Kind,
    adjacency_restricted_insertion,
    apply,
    c_closed_form,
    delta_restricted_insertion,
    right_insertion,
    simple_insertion,
    synchronized_insertion,
    weighted_insertion,
)
from .poly import Polynomial, bilinear_extend, format_polynomial, parse_polynomial, scalar_mul
from .weights import (
    ConstantWeight,
    ExpBilinear,
    ParityWeight,
    TableWeight,
    check_f_equations,
    check_f_symmetry,
    compute_H,
    enumerate_binary_f,
    eval_f,
)
from .words import Alphabet, concat, format_word, insert_at, parse_word

__version__ = "0.1.0"
