"""
Brute-force counterparts of the codec and the semigroup criteria.

Everything here works straight from the definitions (enumerate the
members, try all sums, walk all gap subsets); none of it reuses the
arithmetic shortcuts in ``vectors`` or ``numsets.AperySet``.  Agreement
between the two routes is therefore meaningful evidence, and the
``*_suite`` helpers package those cross-checks for the command line.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import BoundExceededError
from .numsets import NumericalSet
from .vectors import (
    decode,
    encode,
    is_semigroup_closed_form,
    is_semigroup_vector,
)

# enumerate_numerical_sets walks 2^max_frobenius gap subsets.
MAX_ENUMERATION_FROBENIUS = 20


def position_vector_by_enumeration(numset: NumericalSet, n: int) -> tuple[int, ...]:
    """
    Position vector computed literally: enumerate the members in
    increasing order, record the indices of those whose predecessor by n
    is missing, and return the successive index differences.
    """
    if not numset.is_closed_under(n):
        raise ValueError(
            f"position vector undefined: the set is not closed under addition by {n}"
        )
    positions = []
    index = 0
    # every member w with w - n missing satisfies w - n < conductor
    for x in range(numset.conductor + n):
        if x in numset:
            if x - n not in numset:
                positions.append(index)
            index += 1
    assert len(positions) == n
    return tuple(positions[i] - positions[i - 1] for i in range(1, n))


def closure_violations(numset: NumericalSet) -> list[tuple[int, int]]:
    """
    All pairs a <= b of positive sporadic members whose sum lies outside
    the set, in lexicographic order.  Empty iff the set is a semigroup.
    """
    c = numset.conductor
    members = set(numset.sporadic)
    positive = [x for x in numset.sporadic if x > 0]
    out = []
    for i, a in enumerate(positive):
        for b in positive[i:]:
            s = a + b
            if s < c and s not in members:
                out.append((a, b))
    return out


def enumerate_numerical_sets(
    max_frobenius: int, semigroups_only: bool = False
) -> Iterator[NumericalSet]:
    """
    Every numerical set whose largest gap is at most max_frobenius, each
    exactly once: the full set first, then for each largest gap F the
    2^(F-1) gap subsets of {1..F} containing F.
    """
    if max_frobenius > MAX_ENUMERATION_FROBENIUS:
        raise BoundExceededError(
            f"max_frobenius {max_frobenius} exceeds guard {MAX_ENUMERATION_FROBENIUS}"
        )
    yield NumericalSet.naturals()
    for frob in range(1, max_frobenius + 1):
        for mask in range(2 ** (frob - 1)):
            gaps = {i + 1 for i in range(frob - 1) if mask >> i & 1}
            gaps.add(frob)
            numset = NumericalSet.from_gaps(gaps)
            if not semigroups_only or numset.is_semigroup():
                yield numset


@dataclass(frozen=True)
class SuiteResult:
    """Outcome of one verification suite."""

    name: str
    passed: bool
    checked: int
    failure: str | None = None


def bijection_suite(modulus: int = 5, bound: int = 6) -> SuiteResult:
    """encode(decode(v)) == v over the whole {1..bound}^(modulus-1) grid."""
    checked = 0
    for vector in product(range(1, bound + 1), repeat=modulus - 1):
        checked += 1
        back = encode(decode(vector))
        if back != vector:
            return SuiteResult(
                "bijection",
                False,
                checked,
                f"round trip of {vector} came back as {back}",
            )
    return SuiteResult("bijection", True, checked)


def apery_criterion_suite(max_frobenius: int = 8, max_modulus: int = 6) -> SuiteResult:
    """
    The pairwise Apéry-set semigroup criterion against the exhaustive
    closure check, over every small numerical set and every modulus it is
    closed under.
    """
    checked = 0
    for numset in enumerate_numerical_sets(max_frobenius):
        closed = not closure_violations(numset)
        for n in range(1, max_modulus + 1):
            if not numset.is_closed_under(n):
                continue
            checked += 1
            if numset.apery_set(n).generates_semigroup() != closed:
                return SuiteResult(
                    "apery-criterion",
                    False,
                    checked,
                    f"disagreement on {numset} at modulus {n}",
                )
    return SuiteResult("apery-criterion", True, checked)


def vector_criterion_suite(modulus: int = 4, bound: int = 10) -> SuiteResult:
    """
    The vector-level semigroup criterion against brute-force closure of
    the decoded set, over the whole {1..bound}^(modulus-1) grid.
    """
    checked = 0
    for vector in product(range(1, bound + 1), repeat=modulus - 1):
        checked += 1
        direct = is_semigroup_vector(vector)
        actual = not closure_violations(decode(vector).to_numerical_set())
        if direct != actual:
            return SuiteResult(
                "vector-criterion",
                False,
                checked,
                f"vector criterion says {direct} but the decoded set says {actual} "
                f"for {vector}",
            )
    return SuiteResult("vector-criterion", True, checked)


def table_suite(modulus: int = 4, bound: int = 10) -> SuiteResult:
    """
    The closed-form rule tables against the general vector criterion,
    over the whole {1..bound}^(modulus-1) grid (modulus at most 5).
    """
    if modulus > 5:
        raise ValueError("closed-form rules only exist for moduli up to 5")
    checked = 0
    for vector in product(range(1, bound + 1), repeat=modulus - 1):
        checked += 1
        closed_form = is_semigroup_closed_form(vector)
        general = is_semigroup_vector(vector)
        if closed_form != general:
            return SuiteResult(
                "tables",
                False,
                checked,
                f"closed form says {closed_form} but the general criterion says "
                f"{general} for {vector}",
            )
    return SuiteResult("tables", True, checked)
