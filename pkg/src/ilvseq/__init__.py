"""Interleaved signal sets from two-level autocorrelation sequences.

Periodic p-ary sequences, exact correlation profiles, the (v, v) interleaved
signal-set construction with its per-column correlation identity, the
distinctness/multiplicity/completeness conditions on shift vectors, and
exhaustive search over small shift-vector spaces.
"""

from .conditions import (
    ConditionReport,
    DifferenceProfile,
    ShiftCheck,
    check_condition_A,
    check_condition_B,
    check_condition_open,
    cond2_sum_residue,
    condition_a_holds,
    condition_b_holds,
    condition_open_holds,
    differences_A,
    differences_B,
    differences_open,
)
from .correlation import (
    COMPLEX_TOL,
    CorrelationProfile,
    DeltaReport,
    Witness,
    autocorrelation,
    cross_correlation,
    fast_cross_correlation,
    is_two_level,
    signal_set_delta,
)
from .interleaving import (
    INFINITY,
    LemmaTerms,
    ShiftSequence,
    SignalSet,
    TauDecomposition,
    ZeroCount,
    build_signal_set,
    coincident_members,
    decompose_tau,
    extended_entry,
    format_shift_sequence,
    interleave,
    lemma_correlation,
    lemma_terms,
    matrix_form,
    parse_shift_sequence,
    recover_shifts,
    zero_count,
)
from .reproduce import CheckResult, all_passed, run_all
from .search import (
    BUDGET_MAX_V,
    BudgetExceededError,
    NonexistenceEntry,
    SearchOutcome,
    SearchSpec,
    backtrack,
    enumerate_space,
    find_B_not_A,
    run_search,
    sample_random,
    verify_open_nonexistence,
)
from .sequences import (
    PRIMITIVE_POLYS,
    LfsrSpec,
    PeriodicSequence,
    add_pointwise,
    format_sequence,
    gen_legendre,
    gen_mseq,
    is_prime,
    left_shift,
    parse_sequence,
    shift_equivalence,
)

__version__ = "0.1.0"

__all__ = [
    "BUDGET_MAX_V",
    "BudgetExceededError",
    "COMPLEX_TOL",
    "CheckResult",
    "ConditionReport",
    "CorrelationProfile",
    "DeltaReport",
    "DifferenceProfile",
    "INFINITY",
    "LemmaTerms",
    "LfsrSpec",
    "NonexistenceEntry",
    "PRIMITIVE_POLYS",
    "PeriodicSequence",
    "SearchOutcome",
    "SearchSpec",
    "ShiftCheck",
    "ShiftSequence",
    "SignalSet",
    "TauDecomposition",
    "Witness",
    "ZeroCount",
    "add_pointwise",
    "all_passed",
    "autocorrelation",
    "backtrack",
    "build_signal_set",
    "check_condition_A",
    "check_condition_B",
    "check_condition_open",
    "coincident_members",
    "cond2_sum_residue",
    "condition_a_holds",
    "condition_b_holds",
    "condition_open_holds",
    "cross_correlation",
    "decompose_tau",
    "differences_A",
    "differences_B",
    "differences_open",
    "enumerate_space",
    "extended_entry",
    "fast_cross_correlation",
    "find_B_not_A",
    "format_sequence",
    "format_shift_sequence",
    "gen_legendre",
    "gen_mseq",
    "interleave",
    "is_prime",
    "is_two_level",
    "left_shift",
    "lemma_correlation",
    "lemma_terms",
    "matrix_form",
    "parse_sequence",
    "parse_shift_sequence",
    "recover_shifts",
    "run_all",
    "run_search",
    "sample_random",
    "shift_equivalence",
    "signal_set_delta",
    "verify_open_nonexistence",
    "zero_count",
]
