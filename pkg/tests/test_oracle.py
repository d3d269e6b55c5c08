import pytest

from posvec.errors import BoundExceededError
from posvec.numsets import NumericalSet
from posvec.oracle import (
    apery_criterion_suite,
    bijection_suite,
    closure_violations,
    enumerate_numerical_sets,
    position_vector_by_enumeration,
    table_suite,
    vector_criterion_suite,
)
from posvec.vectors import decode, position_vector


def test_position_vector_by_enumeration_golden():
    s = NumericalSet.from_generators([4, 7, 9])
    assert position_vector_by_enumeration(s, 4) == (2, 2, 4)
    # by hand: members 0,4,7,8,9,11,12,13,14,... and Apéry elements mod 8
    # at 0,4,7,9,11,13,14,18, i.e. indices 0,1,2,4,5,7,8,12
    assert position_vector_by_enumeration(s, 8) == (1, 1, 2, 1, 2, 1, 4)
    t = NumericalSet.from_generators([6, 16, 20, 21, 29])
    assert position_vector_by_enumeration(t, 6) == (3, 2, 1, 6, 7)
    assert position_vector_by_enumeration(NumericalSet.naturals(), 4) == (1, 1, 1)
    with pytest.raises(ValueError):
        position_vector_by_enumeration(s, 5)


def test_enumeration_agrees_with_codec():
    for ns in enumerate_numerical_sets(7):
        for n in range(1, 6):
            if ns.is_closed_under(n):
                assert position_vector_by_enumeration(ns, n) == position_vector(ns, n)


def test_closure_violations():
    assert closure_violations(NumericalSet.from_generators([4, 7, 9])) == []
    assert closure_violations(NumericalSet.naturals()) == []
    bad = decode((2, 6)).to_numerical_set()
    assert closure_violations(bad) == [(5, 5)]


def test_vector_criterion_on_enumerated_sets():
    from posvec.vectors import is_semigroup_vector

    for ns in enumerate_numerical_sets(8):
        closed = not closure_violations(ns)
        for n in range(1, 7):
            if ns.is_closed_under(n):
                assert is_semigroup_vector(position_vector(ns, n)) == closed


def test_enumerate_numerical_sets_small():
    assert list(enumerate_numerical_sets(0)) == [NumericalSet.naturals()]
    got = list(enumerate_numerical_sets(2))
    assert got == [
        NumericalSet.naturals(),
        NumericalSet.from_gaps({1}),
        NumericalSet.from_gaps({2}),
        NumericalSet.from_gaps({1, 2}),
    ]


def test_enumerate_numerical_sets_counts_and_uniqueness():
    sets = list(enumerate_numerical_sets(9))
    assert len(sets) == 2**9
    assert len(set(sets)) == len(sets)
    for ns in sets:
        assert ns.frobenius <= 9


def test_enumerate_semigroups_max_frobenius_3():
    got = list(enumerate_numerical_sets(3, semigroups_only=True))
    assert got == [
        NumericalSet.naturals(),
        NumericalSet.from_gaps({1}),
        NumericalSet.from_gaps({1, 2}),
        NumericalSet.from_gaps({1, 3}),
        NumericalSet.from_gaps({1, 2, 3}),
    ]


def test_enumeration_guard():
    with pytest.raises(BoundExceededError):
        list(enumerate_numerical_sets(21))


def test_suites_pass_at_small_bounds():
    result = bijection_suite(4, 5)
    assert result.passed and result.checked == 125 and result.failure is None
    result = apery_criterion_suite(6)
    assert result.passed
    result = vector_criterion_suite(4, 6)
    assert result.passed and result.checked == 216
    result = table_suite(5, 4)
    assert result.passed and result.checked == 256
    with pytest.raises(ValueError):
        table_suite(6, 3)
