"""Tests for the distinctness, multiplicity, and completeness conditions."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ilvseq import (
    INFINITY,
    ShiftSequence,
    check_condition_A,
    check_condition_B,
    check_condition_open,
    cond2_sum_residue,
    condition_a_holds,
    condition_b_holds,
    condition_open_holds,
    differences_A,
    differences_B,
    differences_open,
    zero_count,
)

E7 = ShiftSequence((0, 0, 1, 0, 6, 3, 5))

entries7 = st.lists(st.integers(0, 6), min_size=7, max_size=7).map(tuple)


def shift7(entries):
    return ShiftSequence(entries)


def test_differences_A_worked_example():
    prof = differences_A(E7, 1)
    assert prof.values == (0, 6, 1, 1, 3, 5)
    assert prof.distinct_count == 5
    assert prof.max_multiplicity == 2
    assert prof.multiplicity == ((0, 1), (1, 2), (3, 1), (5, 1), (6, 1))
    assert prof.multiplicity_map[1] == 2
    assert (prof.v, prof.s, prof.mode) == (7, 1, "A-range")


def test_differences_B_worked_example():
    prof = differences_B(E7, 1)
    assert prof.values == (0, 6, 1, 1, 3, 5, 4)
    assert prof.max_multiplicity == 2


def test_differences_B_length_two_vector():
    prof = differences_B(ShiftSequence((0, 1)), 1)
    assert prof.values == (1, 0)


def test_shift_range_validation():
    for fn in (differences_A, differences_B, differences_open):
        with pytest.raises(ValueError):
            fn(E7, 0)
        with pytest.raises(ValueError):
            fn(E7, 7)
    with pytest.raises(ValueError):
        differences_open(E7, 1, form=3)
    with pytest.raises(ValueError):
        differences_A(ShiftSequence((0, INFINITY)), 1)


def test_check_condition_A_worked_example():
    report = check_condition_A(E7)
    assert not report.verdict
    assert report.first_failure_s == 1
    assert report.condition == "A"
    assert [c.s for c in report.checks] == list(range(1, 7))
    first = report.checks[0]
    assert (first.observed, first.required, first.passed) == (5, 6, False)
    assert all(c.passed for c in report.checks[1:])


def test_check_condition_B_worked_example():
    report = check_condition_B(E7)
    assert report.verdict
    assert report.first_failure_s is None
    assert all(c.required == 2 for c in report.checks)
    assert max(c.observed for c in report.checks) == 2


def test_check_condition_open_worked_example():
    report = check_condition_open(E7)
    assert not report.verdict
    assert report.checks[0].observed == 6
    assert report.checks[0].required == 7


def test_completeness_at_length_two():
    # Both normalized length-2 vectors cover Z_2.
    assert check_condition_open(ShiftSequence((0, 1))).verdict
    assert check_condition_open(ShiftSequence((0, 0))).verdict


def test_fast_forms_accept_raw_tuples():
    assert condition_b_holds((0, 0, 1, 0, 6, 3, 5))
    assert not condition_a_holds((0, 0, 1, 0, 6, 3, 5))
    assert condition_open_holds((0, 1))
    with pytest.raises(ValueError):
        condition_a_holds((0, INFINITY))


def test_fast_forms_match_reports_exhaustively_v3_v4():
    for v in (3, 4):
        for entries in itertools.product(range(v), repeat=v):
            e = ShiftSequence(entries)
            assert condition_a_holds(entries) == check_condition_A(e).verdict
            assert condition_b_holds(entries) == check_condition_B(e).verdict
            assert condition_open_holds(entries) == check_condition_open(e).verdict


@given(entries7)
def test_fast_forms_match_reports_sampled_v7(entries):
    e = ShiftSequence(entries)
    assert condition_a_holds(entries) == check_condition_A(e).verdict
    assert condition_b_holds(entries) == check_condition_B(e).verdict
    assert condition_open_holds(entries) == check_condition_open(e).verdict


@given(entries7, st.integers(1, 6))
def test_open_forms_agree(entries, s):
    e = ShiftSequence(entries)
    one = differences_open(e, s, form=1)
    two = differences_open(e, s, form=2)
    assert one.values == two.values
    assert one.multiplicity == two.multiplicity


@given(entries7, st.integers(1, 6))
def test_extended_equals_open_multiset(entries, s):
    e = ShiftSequence(entries)
    assert differences_B(e, s).values == differences_open(e, s).values


@given(entries7, st.integers(1, 6))
def test_sum_identity(entries, s):
    e = ShiftSequence(entries)
    assert cond2_sum_residue(e, s) == (-s) % 7


@given(entries7, st.integers(0, 6))
def test_conditions_translation_invariant(entries, c):
    moved = tuple((x + c) % 7 for x in entries)
    assert condition_a_holds(entries) == condition_a_holds(moved)
    assert condition_b_holds(entries) == condition_b_holds(moved)
    assert condition_open_holds(entries) == condition_open_holds(moved)


@given(entries7)
def test_distinctness_implies_multiplicity(entries):
    if condition_a_holds(entries):
        assert condition_b_holds(entries)


def _max_zero_count(e):
    return max(
        zero_count(e, s, r).n0 for s in range(1, e.v) for r in range(e.v)
    )


def test_multiplicity_matches_zero_counts_exhaustively_v3():
    # The worst per-(s, r) count of vanishing column shifts is the worst
    # multiplicity among the extended differences, so the two gates agree.
    for entries in itertools.product(range(3), repeat=3):
        e = ShiftSequence(entries)
        assert condition_b_holds(entries) == (_max_zero_count(e) <= 2)


@given(entries7)
def test_multiplicity_matches_zero_counts_sampled_v7(entries):
    e = ShiftSequence(entries)
    assert condition_b_holds(entries) == (_max_zero_count(e) <= 2)
