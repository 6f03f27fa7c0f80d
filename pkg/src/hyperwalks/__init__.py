"""Exact enumeration of {+1,-1}^(r+1) lattice walks ending on a hyperplane.

Six families of walks (ending on the last-coordinate hyperplane, optionally
confined to the half-space above it, optionally avoiding backtracking or
repeated steps) counted by several independent methods that are cross-checked
against each other: brute-force enumeration, dynamic programming, binomial
closed forms, terminating hypergeometric sums, holonomic recurrences, and
generating-function expansion, plus singularity asymptotics and a run-length
bijection onto diagonal-step paths.
"""

from .core import (
    ConsistencyError,
    DimensionMismatch,
    BudgetExceeded,
    LanguageSpec,
    PatternKind,
    StepFormatError,
    StepVector,
    Word,
    flip_coordinate,
    format_step,
    format_word,
    height_profile,
    negate_step,
    parse_step,
    parse_word,
    step_alphabet,
)
from .automata import (
    accepts_halfspace,
    accepts_hyperplane,
    avoids_pattern,
    recognize,
)
from .oracle import (
    CountTable,
    count_dp,
    count_dp_first_step,
    count_dp_multi,
    count_naive,
    enumerate_words,
    naive_census,
)
from .formulas import (
    HypergeometricSpec,
    RecurrenceSpec,
    SingularParameterError,
    a_multi,
    a_multi_recurrence,
    catalan,
    central_binomial,
    closed_form,
    cross_ratio_check,
    hyper_form,
    hyper_terminating,
    narayana,
    recurrence_seq,
)
from .series import (
    AsymptoticForm,
    PowerSeries,
    asymptotic_form,
    asymptotic_ratio,
    gf_series,
    ps_add,
    ps_div,
    ps_mul,
    ps_sqrt,
)
from .bijection import (
    BijectionDomainError,
    DiagonalPath,
    RunDecomposition,
    count_E_double_prime,
    phi,
    phi_inverse,
    run_decompose,
    verify_bijection,
)
from .bfile import BFile, bfile_emit, bfile_parse, compare_with_table, oeis_fetch
from .checks import CheckReport, run_check

__version__ = "0.1.0"

__all__ = [
    "AsymptoticForm",
    "BFile",
    "BijectionDomainError",
    "BudgetExceeded",
    "CheckReport",
    "ConsistencyError",
    "CountTable",
    "DiagonalPath",
    "DimensionMismatch",
    "HypergeometricSpec",
    "LanguageSpec",
    "PatternKind",
    "PowerSeries",
    "RecurrenceSpec",
    "RunDecomposition",
    "SingularParameterError",
    "StepFormatError",
    "StepVector",
    "Word",
    "a_multi",
    "a_multi_recurrence",
    "accepts_halfspace",
    "accepts_hyperplane",
    "asymptotic_form",
    "asymptotic_ratio",
    "avoids_pattern",
    "bfile_emit",
    "bfile_parse",
    "catalan",
    "central_binomial",
    "closed_form",
    "compare_with_table",
    "count_E_double_prime",
    "count_dp",
    "count_dp_first_step",
    "count_dp_multi",
    "count_naive",
    "cross_ratio_check",
    "enumerate_words",
    "flip_coordinate",
    "format_step",
    "format_word",
    "gf_series",
    "height_profile",
    "hyper_form",
    "hyper_terminating",
    "naive_census",
    "narayana",
    "negate_step",
    "oeis_fetch",
    "parse_step",
    "parse_word",
    "phi",
    "phi_inverse",
    "ps_add",
    "ps_div",
    "ps_mul",
    "ps_sqrt",
    "recognize",
    "recurrence_seq",
    "run_check",
    "run_decompose",
    "step_alphabet",
    "verify_bijection",
]
