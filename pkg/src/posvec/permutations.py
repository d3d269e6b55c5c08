"""
Codec between permutations of {1, ..., m} and their conversion vectors.

A permutation is written in one-line form as a sequence of the values
1..m, e.g. (4, 2, 3, 5, 1).  Its conversion vector (r_1, ..., r_m)
records, for each position i, how many earlier entries are smaller:

    r_i = |{j : j < i and perm_j < perm_i}|

so 0 <= r_i <= i - 1 always holds, and every vector obeying that bound
comes from exactly one permutation.  The maps below realise both
directions; m = 0 (the empty permutation) round-trips to the empty
vector.
"""

from __future__ import annotations

from typing import Sequence


def validate_permutation(perm: Sequence[int]) -> None:
    """Raise ValueError unless perm is a rearrangement of 1..len(perm)."""
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"not a permutation of 1..{len(perm)}: {tuple(perm)!r}")


def validate_conversion_vector(vector: Sequence[int]) -> None:
    """Raise ValueError unless 0 <= vector[i] <= i for every 0-based index i."""
    for i, r in enumerate(vector, start=1):
        if not isinstance(r, int) or not 0 <= r <= i - 1:
            raise ValueError(f"conversion entry {i} must lie in 0..{i - 1}, got {r!r}")


def conversion_vector(perm: Sequence[int]) -> tuple[int, ...]:
    """
    The conversion vector of a permutation: entry i counts the earlier
    entries that are smaller than perm[i].

    >>> conversion_vector([4, 2, 3, 5, 1])
    (0, 0, 1, 3, 0)
    >>> conversion_vector([1, 2, 3, 4])
    (0, 1, 2, 3)
    >>> conversion_vector([5, 4, 3, 2, 1])
    (0, 0, 0, 0, 0)
    """
    validate_permutation(perm)
    return tuple(
        sum(1 for j in range(i) if perm[j] < perm[i]) for i in range(len(perm))
    )


def permutation_from_conversion(vector: Sequence[int]) -> tuple[int, ...]:
    """
    The unique permutation whose conversion vector is the given vector.

    Built left to right: step i appends r_i + 1 and shifts every earlier
    entry exceeding r_i up by one, which preserves the relative order of
    the prefix while making the new entry beat exactly r_i of them.

    >>> permutation_from_conversion((0, 0, 1, 3, 0))
    (4, 2, 3, 5, 1)
    >>> permutation_from_conversion((0, 1, 2, 3))
    (1, 2, 3, 4)
    """
    validate_conversion_vector(vector)
    entries: list[int] = []
    for r in vector:
        for k, e in enumerate(entries):
            if e > r:
                entries[k] = e + 1
        entries.append(r + 1)
    return tuple(entries)
