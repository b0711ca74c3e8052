"""Exact combinatorics of q-ary insertion/deletion/substitution balls.

Enumeration, closed-form sizes, the minimum-size bound with its exact
equality characterization, the constructive mappings behind those facts,
and a brute-force verification harness that cross-checks all of it at
desk scale.
"""

from ._backend import BACKEND as kernel_backend
from .balls import (
    DEFAULT_WORD_CAP,
    MAX_WORD_LEN,
    BallParams,
    BallSet,
    ball,
    ball_size,
    definitional_ball,
    deletion_ball,
    insertion_ball,
    member_definitional,
    substitution_ball,
)
from .constructions import (
    InjectionTrace,
    bijection_insertion,
    bijection_insertion_inverse,
    injection_idp,
    witness_deletion_pair,
    witness_nonsurjective,
    witness_swap_flip,
)
from .errors import (
    DomainError,
    NotASubsequenceError,
    PostconditionError,
    WordCapExceededError,
)
from .formulas import (
    BoundReport,
    binomial,
    levenshtein_intersection_max,
    min_ball_bound,
    minimality_predicate,
    size_insertion_ball,
    size_substitution_ball,
    size_zero_ball,
)
from .seqcore import (
    IndexSet,
    Sequence,
    hamming,
    is_subsequence,
    matching_set,
    overline,
    project,
    run_count,
    sym_add,
    sym_sub,
)
from .verify import (
    ALL_CHECKS,
    CaseRecord,
    GridSpec,
    SkipRecord,
    VerificationReport,
    run_grid,
    verify_containments,
    verify_formulas,
    verify_intersection_max,
    verify_mappings,
    verify_theorem,
    verify_witnesses,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_CHECKS",
    "BallParams",
    "BallSet",
    "BoundReport",
    "CaseRecord",
    "DEFAULT_WORD_CAP",
    "DomainError",
    "GridSpec",
    "IndexSet",
    "InjectionTrace",
    "MAX_WORD_LEN",
    "NotASubsequenceError",
    "PostconditionError",
    "Sequence",
    "SkipRecord",
    "VerificationReport",
    "WordCapExceededError",
    "ball",
    "ball_size",
    "bijection_insertion",
    "bijection_insertion_inverse",
    "binomial",
    "definitional_ball",
    "deletion_ball",
    "hamming",
    "injection_idp",
    "insertion_ball",
    "is_subsequence",
    "kernel_backend",
    "levenshtein_intersection_max",
    "matching_set",
    "member_definitional",
    "min_ball_bound",
    "minimality_predicate",
    "overline",
    "project",
    "run_count",
    "run_grid",
    "size_insertion_ball",
    "size_substitution_ball",
    "size_zero_ball",
    "substitution_ball",
    "sym_add",
    "sym_sub",
    "verify_containments",
    "verify_formulas",
    "verify_intersection_max",
    "verify_mappings",
    "verify_theorem",
    "verify_witnesses",
    "witness_deletion_pair",
    "witness_nonsurjective",
    "witness_swap_flip",
]
