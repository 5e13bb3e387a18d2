"""Frobenius-type representability over factor languages of infinite words.

Four built-in words (paperfolding, Fibonacci, a quintic morphic binary word,
and a balanced ternary word), factor scanning with sound covering
strategies, and exact machinery for deciding which weight maps make the set
of factor values miss only finitely many integers.
"""

from .words import (
    ConfigurationError,
    FiniteWord,
    Morphism,
    PHI_MORPHISM,
    WordGenerator,
    PaperfoldingWord,
    FibonacciWord,
    MorphicFixedPoint,
    TernaryBalancedWord,
    WORDS,
    paperfolding_letter,
    paperfolding_prefix,
    floor_phi,
    floor_alpha,
    fib_beatty,
    fibonacci_letter,
    fibonacci_prefix,
    iterate_morphism,
    incidence_matrix,
    replace_alternate_zeros,
    ternary_t_letter,
    ternary_t_prefix,
)
from .factors import (
    StabilizationError,
    FactorNotFoundError,
    ParikhVector,
    ZeroEnvelope,
    DeltaStats,
    WelldocReport,
    ExplicitPrefix,
    MorphicCover,
    StabilizedDoubling,
    default_source,
    parikh,
    parikh_set,
    parikh_set_table,
    abelian_complexity,
    zero_envelope,
    zero_envelope_table,
    pf_delta_stats,
    is_balanced,
    welldoc_check,
)
from .frobenius import (
    Weights,
    ComplementReport,
    WitnessResult,
    sylvester_number,
    s_value,
    representable_set,
    complement_below,
    pf_witnesses,
)
from .morphic import (
    PhiBoundParams,
    AbBound,
    BaseCaseReport,
    phi_envelope_table,
    verify_phi_base_case,
    verify_pvects_window,
    ab_bound,
    Table1Row,
    table1,
)
from .ternary import (
    Half,
    OffsetTable,
    InfiniteWitness,
    TernaryDecision,
    Table2Row,
    offsets,
    main_term,
    f_sequence,
    mu,
    mu_printed_closed_form,
    mu_divergence,
    generating_prefix_parikh,
    g_values,
    interval_I,
    semi_image,
    semi_complement,
    decision_window_length,
    decide_cofinite,
    finite_complement,
    table2,
)
from .golden import TABLE1_GOLDEN, TABLE2_GOLDEN

__version__ = "0.1.0"
