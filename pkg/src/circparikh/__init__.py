"""Exact counting of scattered subwords in linear and circular words,
with the unitriangular Parikh matrices that organize those counts,
M-equivalence decisions, matrix-preserving rewriting rules for ternary
circular words, and exhaustive desk-scale verification suites."""

from .matrices import (
    Rational,
    UnitriangularMatrix,
    format_rational,
    parse_rational,
)
from .words import (
    Alphabet,
    count_subword,
    inverse_identity_check,
    mirror,
    parikh_matrix,
    parikh_vector,
    permutation_identity_check,
    project,
)
from .circular import (
    CircularWord,
    avg_count,
    binary_closed_form,
    canonicalize,
    circular_inverse_alternate_check,
    circular_parikh_matrix,
    circular_power_check,
    conjugacy_class,
    cyclic_shift,
    direct_count,
    m_equivalent,
    mirror_class,
    primitive_root,
    product_identity_check,
    slender_partition_check,
    weak_ratio,
)
from .rewriting import (
    NaiveFailure,
    RewriteEdge,
    RewriteGraph,
    RuleApplication,
    apply_e1,
    apply_e2,
    find_ce1,
    find_ce2,
    naive_rule_failure_examples,
    parikh_vector_sufficiency,
    rewrite_closure,
)
from .enumeration import (
    MEquivClassReport,
    MinorWitness,
    SUITE_NAMES,
    SuiteLimits,
    SuiteResult,
    enumerate_necklaces,
    necklace_count,
    partition_by_matrix,
    run_suite,
    search_negative_minor,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "CircularWord",
    "MEquivClassReport",
    "MinorWitness",
    "NaiveFailure",
    "Rational",
    "RewriteEdge",
    "RewriteGraph",
    "RuleApplication",
    "SUITE_NAMES",
    "SuiteLimits",
    "SuiteResult",
    "UnitriangularMatrix",
    "apply_e1",
    "apply_e2",
    "avg_count",
    "binary_closed_form",
    "canonicalize",
    "circular_inverse_alternate_check",
    "circular_parikh_matrix",
    "circular_power_check",
    "conjugacy_class",
    "count_subword",
    "cyclic_shift",
    "direct_count",
    "enumerate_necklaces",
    "find_ce1",
    "find_ce2",
    "format_rational",
    "inverse_identity_check",
    "m_equivalent",
    "mirror",
    "mirror_class",
    "naive_rule_failure_examples",
    "necklace_count",
    "parikh_matrix",
    "parikh_vector",
    "parikh_vector_sufficiency",
    "parse_rational",
    "partition_by_matrix",
    "permutation_identity_check",
    "primitive_root",
    "product_identity_check",
    "project",
    "rewrite_closure",
    "run_suite",
    "search_negative_minor",
    "slender_partition_check",
    "weak_ratio",
]
