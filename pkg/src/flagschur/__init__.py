"""Characters of flagged Schur modules of diagrams."""

from .characters import (
    CharacterResult,
    character_recursive,
    character_via_reduced_words,
    schubert_divided_difference,
    schubert_nst,
    single_column_character,
)
from .diagram import Diagram, Permutation, classify, descent_set, rothe_diagram
from .errors import FlagSchurError
from .oracle import FlagBound, character_oracle, kernel_character
from .poly import Polynomial, RankSequence

__all__ = [
    "CharacterResult",
    "Diagram",
    "FlagBound",
    "FlagSchurError",
    "Permutation",
    "Polynomial",
    "RankSequence",
    "character_oracle",
    "character_recursive",
    "character_via_reduced_words",
    "classify",
    "descent_set",
    "kernel_character",
    "rothe_diagram",
    "schubert_divided_difference",
    "schubert_nst",
    "single_column_character",
]
