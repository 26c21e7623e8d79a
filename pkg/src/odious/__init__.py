"""Odious and evil numbers, their base-d digit-class generalizations, and
exact verifiers for the identities they satisfy.

The closed forms live in `digits`, `sequences`, and `summation`; `morphic`
generates the underlying letter word by substitution; `shevelev` holds the
mod-4 case analysis of the odious summatory function; `characterization`
rebuilds the pair from its functional equations; `oracle` keeps the
brute-force reference paths everything is checked against.
"""

from ._backend import COMPILED
from .characterization import (
    ConstructionError,
    ConstructionState,
    SolutionSet,
    construct_offset,
    construct_parity,
    search_partition_solutions,
    verify_relations,
)
from .digits import digit_sum, residue, t
from .morphic import LetterStream, morphism_image, prefix, stream
from .oracle import oracle_sum, oracle_t, oracle_terms
from .report import VerificationReport
from .sequences import (
    EVIL,
    ODIOUS,
    SequenceSpec,
    compose,
    evil,
    is_member,
    odious,
    rank,
    term,
    term_range,
)
from .shevelev import Mod4Ordering, ShevelevCase, classify, cmp_mod4, verify_range
from .summation import (
    CrossIdentity,
    SequenceClass,
    bounded_sum,
    cross_identity,
    evil_summatory,
    odious_summatory,
    residue_run_sum,
    summatory,
)

__version__ = "0.1.0"

__all__ = [
    "COMPILED",
    "ConstructionError",
    "ConstructionState",
    "CrossIdentity",
    "EVIL",
    "LetterStream",
    "Mod4Ordering",
    "ODIOUS",
    "SequenceClass",
    "SequenceSpec",
    "ShevelevCase",
    "SolutionSet",
    "VerificationReport",
    "bounded_sum",
    "classify",
    "cmp_mod4",
    "compose",
    "construct_offset",
    "construct_parity",
    "cross_identity",
    "digit_sum",
    "evil",
    "evil_summatory",
    "is_member",
    "morphism_image",
    "odious",
    "odious_summatory",
    "oracle_sum",
    "oracle_t",
    "oracle_terms",
    "prefix",
    "rank",
    "residue",
    "residue_run_sum",
    "search_partition_solutions",
    "stream",
    "summatory",
    "t",
    "term",
    "term_range",
    "verify_range",
    "verify_relations",
]
