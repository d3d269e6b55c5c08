"""
Position vectors of numerical semigroups and numerical sets.

The increasing enumeration of a numerical set closed under addition by
n pins down where its Apéry set sits; the successive differences of
those positions form an (n-1)-tuple of positive integers that
determines the set completely.  This package provides the codec in both
directions, criteria deciding which vectors belong to numerical
semigroups, brute-force oracles for cross-checking, and a CLI.
"""

from . import oracle
from .errors import BoundExceededError
from .numsets import (
    INT64_MAX,
    AperyDecomposition,
    AperySet,
    NumericalSet,
    SemigroupSummary,
)
from .permutations import conversion_vector, permutation_from_conversion
from .vectors import (
    VECTOR_FILTERS,
    ClassProfile,
    apery_positions,
    class_profile,
    congruent,
    decode,
    encode,
    enumerate_vectors,
    is_semigroup_closed_form,
    is_semigroup_vector,
    multiplicity_is_modulus,
    position_vector,
    vector_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "AperyDecomposition",
    "AperySet",
    "BoundExceededError",
    "ClassProfile",
    "INT64_MAX",
    "NumericalSet",
    "SemigroupSummary",
    "VECTOR_FILTERS",
    "apery_positions",
    "class_profile",
    "congruent",
    "conversion_vector",
    "decode",
    "encode",
    "enumerate_vectors",
    "is_semigroup_closed_form",
    "is_semigroup_vector",
    "multiplicity_is_modulus",
    "oracle",
    "permutation_from_conversion",
    "position_vector",
    "vector_decomposition",
]
