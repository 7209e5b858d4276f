"""Numeration on regular languages and the sequences it generates.

A numeration system here is an infinite regular language enumerated in
shortlex order: the n-th accepted word is the representation of n.  Running
those representations through a finite-state output machine yields a
sequence; this package computes representations and ranks, streams such
sequences, converts them to and from per-symbol fibers, kernel classes, and
substitutions with codings, and profiles their block complexity.
"""

from .automata import (
    BOTTOM,
    DEAD,
    Dfa,
    Dfao,
    OrderedAlphabet,
    ProductMachine,
    Word,
    difference,
    distinguishing_word,
    equivalent,
    intersect,
    is_empty,
    is_infinite,
    minimize,
    product,
    reduce_dfao,
    union,
)
from .complexity import (
    BinomialWord,
    ComplexityProfile,
    GROWTH_CLASSES,
    QuadraticWitnessReport,
    SuperQuadraticReport,
    UpperBoundReport,
    binomial_bits,
    binomial_word,
    factor_count,
    quadratic_witness_check,
    super_quadratic_check,
    upper_bound_check,
)
from .errors import (
    AlphabetMismatchError,
    AnsError,
    FiniteLanguageError,
    FormatError,
    KernelBoundError,
    NotInLanguageError,
    NotProlongableError,
    PartitionError,
)
from .fileformat import (
    EPS,
    format_dfa,
    format_dfao,
    format_morphism,
    format_substitution,
    parse_dfa,
    parse_dfao,
    parse_morphism,
    parse_substitution,
    parse_word,
    render_word,
)
from .numeration import NumerationSystem
from .sequences import (
    AutomaticSequence,
    GapReport,
    KernelClass,
    dfao_from_fibers,
    dfao_from_kernel,
    fiber,
    kernel,
    occurrence_gaps,
    sequence,
    subsequence,
    take,
)
from .substitutions import (
    Morphism,
    Substitution,
    canonical_substitution,
    fixed_point,
    is_substitution_morphism,
    state_morphism,
    substitution_of,
    system_from_morphism,
)

__version__ = "0.1.0"

__all__ = [
    "AlphabetMismatchError",
    "AnsError",
    "AutomaticSequence",
    "BOTTOM",
    "BinomialWord",
    "ComplexityProfile",
    "DEAD",
    "Dfa",
    "Dfao",
    "EPS",
    "FiniteLanguageError",
    "FormatError",
    "GROWTH_CLASSES",
    "GapReport",
    "KernelBoundError",
    "KernelClass",
    "Morphism",
    "NotInLanguageError",
    "NotProlongableError",
    "NumerationSystem",
    "OrderedAlphabet",
    "PartitionError",
    "ProductMachine",
    "QuadraticWitnessReport",
    "Substitution",
    "SuperQuadraticReport",
    "UpperBoundReport",
    "Word",
    "binomial_bits",
    "binomial_word",
    "canonical_substitution",
    "dfao_from_fibers",
    "dfao_from_kernel",
    "difference",
    "distinguishing_word",
    "equivalent",
    "factor_count",
    "fiber",
    "fixed_point",
    "format_dfa",
    "format_dfao",
    "format_morphism",
    "format_substitution",
    "intersect",
    "is_empty",
    "is_infinite",
    "is_substitution_morphism",
    "kernel",
    "minimize",
    "occurrence_gaps",
    "parse_dfa",
    "parse_dfao",
    "parse_morphism",
    "parse_substitution",
    "parse_word",
    "product",
    "quadratic_witness_check",
    "reduce_dfao",
    "render_word",
    "sequence",
    "state_morphism",
    "subsequence",
    "substitution_of",
    "super_quadratic_check",
    "system_from_morphism",
    "take",
    "union",
    "upper_bound_check",
]
