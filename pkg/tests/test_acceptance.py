"""
Acceptance suite: eight end-to-end criteria, all exact integer equality
(zero tolerance), each printing one PASS line when it holds.  Run with
`pytest tests/test_acceptance.py -v -s` to see the lines; total runtime
is a few seconds on commodity hardware.
"""

import random
from collections import Counter
from functools import lru_cache
from itertools import permutations, product

from posvec.numsets import AperySet, NumericalSet
from posvec.oracle import (
    closure_violations,
    enumerate_numerical_sets,
    position_vector_by_enumeration,
)
from posvec.permutations import conversion_vector, permutation_from_conversion
from posvec.vectors import (
    CLOSED_FORM_RULES_LEN3,
    CLOSED_FORM_RULES_LEN4,
    apery_positions,
    decode,
    encode,
    is_semigroup_closed_form,
    is_semigroup_vector,
    multiplicity_is_modulus,
    position_vector,
    vector_decomposition,
)

# criterion 4 grids: modulus -> entry bound
GRIDS = {3: 40, 4: 20, 5: 10, 6: 6}


@lru_cache(maxsize=1)
def grid_data():
    """For each criterion-4 grid: (vector, closed-by-brute-force, multiplicity)."""
    data = {}
    for n, bound in GRIDS.items():
        rows = []
        for vector in product(range(1, bound + 1), repeat=n - 1):
            numset = decode(vector).to_numerical_set()
            rows.append((vector, numset.is_semigroup(), numset.multiplicity))
        data[n] = rows
    return data


def test_criterion_1_golden_examples():
    s479 = NumericalSet.from_generators([4, 7, 9])
    assert position_vector(s479, 4) == (2, 2, 4)
    assert apery_positions((2, 2, 4)) == (0, 2, 4, 8)
    assert decode((2, 2, 4)).to_numerical_set() == s479

    s469 = NumericalSet.from_generators([4, 6, 9])
    assert position_vector(s469, 4) == (2, 2, 5)
    assert decode((2, 2, 5)).to_numerical_set() == s469

    big = NumericalSet.from_generators([6, 16, 20, 21, 29])
    apery = big.apery_set(6)
    assert apery == AperySet(6, (0, 16, 20, 21, 29, 37))
    assert encode(apery) == (3, 2, 1, 6, 7)
    split = vector_decomposition((3, 2, 1, 6, 7))
    assert conversion_vector(split.residues) == (0, 0, 1, 3, 0)
    assert split.quotients == (2, 3, 3, 4, 6)
    assert decode((3, 2, 1, 6, 7)) == apery

    assert conversion_vector((4, 2, 3, 5, 1)) == (0, 0, 1, 3, 0)
    chain = [(1,), (2, 1), (3, 1, 2), (3, 1, 2, 4), (4, 2, 3, 5, 1)]
    for k, expected in enumerate(chain, start=1):
        assert permutation_from_conversion((0, 0, 1, 3, 0)[:k]) == expected

    print("PASS criterion 1: golden examples reproduced exactly")


def test_criterion_2_bijection():
    checked = 0
    for n in (2, 3, 4, 5):
        for vector in product(range(1, 7), repeat=n - 1):
            assert encode(decode(vector)) == vector
            checked += 1
    assert checked == 6 + 36 + 216 + 1296

    rng = random.Random(20260810)
    for _ in range(10_000):
        n = rng.randint(2, 9)
        vector = tuple(rng.randint(1, 50) for _ in range(n - 1))
        assert encode(decode(vector)) == vector

    total_sets = 0
    pairs = 0
    for numset in enumerate_numerical_sets(9):
        total_sets += 1
        for n in range(1, 7):
            if not numset.is_closed_under(n):
                continue
            vector = position_vector(numset, n)
            assert vector == position_vector_by_enumeration(numset, n)
            assert decode(vector).to_numerical_set() == numset
            pairs += 1
    assert total_sets == 2**9
    assert pairs > 0

    print(
        f"PASS criterion 2: bijection holds on {checked} exhaustive grid vectors, "
        f"10000 random vectors, {pairs} set/modulus pairs"
    )


def test_criterion_3_apery_criterion_matches_closure():
    def agree(apery):
        direct = apery.generates_semigroup()
        brute = not closure_violations(apery.to_numerical_set())
        assert direct == brute, apery
        return 1

    checked = 0
    for n in (2, 3, 4, 5):
        for vector in product(range(1, 7), repeat=n - 1):
            checked += agree(decode(vector))
    for numset in enumerate_numerical_sets(9):
        for n in range(1, 7):
            if numset.is_closed_under(n):
                checked += agree(numset.apery_set(n))

    rng = random.Random(31)
    for _ in range(1_000):
        n = rng.randint(2, 7)
        vector = tuple(rng.randint(1, 20) for _ in range(n - 1))
        checked += agree(decode(vector))

    print(f"PASS criterion 3: pairwise Apéry criterion matches closure on {checked} sets")


def test_criterion_4_vector_criterion_matches_brute_force():
    counts = {}
    for n, rows in grid_data().items():
        for vector, closed, _ in rows:
            assert is_semigroup_vector(vector) == closed, vector
        counts[n] = len(rows)
    assert counts == {3: 1600, 4: 8000, 5: 10_000, 6: 7776}
    print(
        "PASS criterion 4: vector criterion matches brute-force closure on "
        + ", ".join(f"{v} vectors (n={k})" for k, v in sorted(counts.items()))
    )


def test_criterion_5_closed_form_tables():
    checked = 0
    for vector in product(range(1, 41), repeat=1):
        assert is_semigroup_closed_form(vector) == is_semigroup_vector(vector)
        checked += 1
    for n in (3, 4, 5):
        for vector, _, _ in grid_data()[n]:
            assert is_semigroup_closed_form(vector) == is_semigroup_vector(vector)
            checked += 1

    reps3 = set(product((1,), (1, 2), (1, 2, 3)))
    assert set(CLOSED_FORM_RULES_LEN3) == reps3 and len(reps3) == 6
    reps4 = set(product((1,), (1, 2), (1, 2, 3), (1, 2, 3, 4)))
    assert set(CLOSED_FORM_RULES_LEN4) == reps4 and len(reps4) == 24

    print(
        f"PASS criterion 5: closed-form tables agree with the general criterion on "
        f"{checked} vectors; 6 + 24 representatives each match exactly one rule row"
    )


def test_criterion_6_multiplicity_flag():
    checked = 0
    for n, rows in grid_data().items():
        for vector, closed, multiplicity in rows:
            if not closed:
                continue
            assert multiplicity_is_modulus(vector) == (multiplicity == n), vector
            checked += 1
    print(
        f"PASS criterion 6: first-entry test matches the decoded multiplicity on "
        f"{checked} semigroup vectors"
    )


def test_criterion_7_permutation_codec_exhaustive():
    trips = 0
    for m in range(9):
        for perm in permutations(range(1, m + 1)):
            assert permutation_from_conversion(conversion_vector(perm)) == perm
            trips += 1

    for m in range(8):
        image = {conversion_vector(p) for p in permutations(range(1, m + 1))}
        box = set(product(*(range(i) for i in range(1, m + 1))))
        assert image == box

    print(
        f"PASS criterion 7: conversion codec round-trips all {trips} permutations "
        f"(m <= 8) and fills the whole conversion box (m <= 7)"
    )


def test_criterion_8_genus_frobenius_cross_route():
    # decomposition identities on every small semigroup and member modulus
    pairs = 0
    for numset in enumerate_numerical_sets(9, semigroups_only=True):
        c = numset.conductor
        for n in range(1, c + 7):
            if n not in numset:
                continue
            apery = numset.apery_set(n)
            assert numset.genus == sum(apery.decompose().quotients)
            assert numset.frobenius == max(apery.elements) - n
            pairs += 1

    # route 1: gap subsets (largest gap <= 2g-1 <= 11 for genus g <= 6)
    by_gaps = Counter(
        ns.genus
        for ns in enumerate_numerical_sets(13, semigroups_only=True)
        if ns.genus <= 6
    )

    # route 2: position vectors filtered to multiplicity n = len+1.
    # A multiplicity-(m+1) semigroup has non-decreasing Apéry quotients
    # k_1 <= ... <= k_m with k_1 >= 1 and genus = sum(k); that caps each
    # k_i and hence each entry v_i = i*u_i + rep_i with u_i <= k_i - 1.
    cap = 6
    decoded = {decode(()).to_numerical_set()}
    for m in range(1, cap + 1):
        first = cap // m + 1
        ranges = [range(2, first + 1)]
        for i in range(2, m + 1):
            k_cap = (cap - (i - 1)) // (m - i + 1)
            ranges.append(range(1, i * k_cap + 1))
        for vector in product(*ranges):
            if not (multiplicity_is_modulus(vector) and is_semigroup_vector(vector)):
                continue
            if sum(vector_decomposition(vector).quotients) > cap:
                continue
            numset = decode(vector).to_numerical_set()
            assert numset.multiplicity == m + 1
            decoded.add(numset)
    by_vectors = Counter(ns.genus for ns in decoded)

    expected = {0: 1, 1: 1, 2: 2, 3: 4, 4: 7, 5: 12, 6: 23}
    assert dict(by_gaps) == expected
    assert dict(by_vectors) == expected

    print(
        f"PASS criterion 8: genus/Frobenius identities hold on {pairs} "
        f"semigroup/modulus pairs; both enumeration routes count semigroups by "
        f"genus as {[expected[g] for g in range(7)]}"
    )
