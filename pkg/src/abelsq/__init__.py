"""Abelian squares in binary words: counting, closed forms and exhaustive search."""

from .closed_forms import (
    EffectivePartition,
    M_closed,
    TwoARunShape,
    conjectured_min,
    effective_partition,
    effective_word,
    extremal_words,
    fici_saarela_bound,
    theta_effective,
    two_a_decomposition,
)
from .counter import (
    FactorSet,
    Occurrence,
    SquareCensus,
    census,
    circular_census,
    distinct_abelian_squares,
    equivalent,
    five_run_witness,
    is_abelian_square,
    occurrences,
    theta,
)
from .words import (
    Letter,
    ParikhVector,
    Word,
    WordSyntaxError,
    build_from_runs,
    complement,
    conjugate,
    format_word,
    parikh,
    parse_word,
    reverse,
    runs,
)

__version__ = "0.1.0"
