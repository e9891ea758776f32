"""Filtering formal languages along arithmetic progressions, the
square-diagonal operation, and desk-scale verification of both."""

from .automata import Alphabet, Dfa, Nfa, Word
from .boolmat import (
    BoolMatrix,
    BoolVector,
    PowerOrbit,
    dot,
    incidence_matrices,
    mat_mul,
    mat_pow,
    mat_vec_mul,
    power_orbit,
    vec_mat_mul,
)
from .diag import (
    BudgetExceededError,
    DiagState,
    build_diag_nfa,
    diag_oracle_accepts,
    diag_oracle_exhaustive,
    diag_word,
)
from .filtration import (
    ArithFilter,
    FilterFamily,
    FiltrationAtlas,
    FiltrationSignature,
    build_filtered_dfa,
    enumerate_distinct_filtrations,
    enumeration_window,
    filter_word,
    filter_word_general,
    filtered_language_oracle,
    signature,
)
from .grammar import (
    Cfg,
    THM2_ALPHABET,
    THM2_GRAMMAR,
    THM5_ALPHABET,
    ZERO_N_ONE_N_GRAMMAR,
    ZERO_ONE_ALPHABET,
    cyk_accepts,
    enumerate_cfg_words,
    enumerate_thm5_by_length,
    in_0n1n,
    in_thm2,
    in_thm5,
    thm5_witness,
    to_cnf,
)
from .verification import (
    DEFAULT_SEED,
    ClaimResult,
    VerificationReport,
    random_dfa,
    run_claims,
)

__all__ = [
    "Alphabet",
    "ArithFilter",
    "BoolMatrix",
    "BoolVector",
    "BudgetExceededError",
    "Cfg",
    "ClaimResult",
    "DEFAULT_SEED",
    "Dfa",
    "DiagState",
    "FilterFamily",
    "FiltrationAtlas",
    "FiltrationSignature",
    "Nfa",
    "PowerOrbit",
    "THM2_ALPHABET",
    "THM2_GRAMMAR",
    "THM5_ALPHABET",
    "VerificationReport",
    "Word",
    "ZERO_N_ONE_N_GRAMMAR",
    "ZERO_ONE_ALPHABET",
    "build_diag_nfa",
    "build_filtered_dfa",
    "cyk_accepts",
    "diag_oracle_accepts",
    "diag_oracle_exhaustive",
    "diag_word",
    "dot",
    "enumerate_cfg_words",
    "enumerate_distinct_filtrations",
    "enumerate_thm5_by_length",
    "enumeration_window",
    "filter_word",
    "filter_word_general",
    "filtered_language_oracle",
    "in_0n1n",
    "in_thm2",
    "in_thm5",
    "incidence_matrices",
    "mat_mul",
    "mat_pow",
    "mat_vec_mul",
    "power_orbit",
    "random_dfa",
    "run_claims",
    "signature",
    "thm5_witness",
    "to_cnf",
    "vec_mat_mul",
]
