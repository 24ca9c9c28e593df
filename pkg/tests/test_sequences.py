"""Tests for periodic sequences, shifts, and the base-sequence generators."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ilvseq import (
    PRIMITIVE_POLYS,
    LfsrSpec,
    PeriodicSequence,
    add_pointwise,
    format_sequence,
    gen_legendre,
    gen_mseq,
    is_prime,
    left_shift,
    parse_sequence,
    shift_equivalence,
)

A7 = PeriodicSequence(2, (1, 0, 0, 1, 1, 1, 0))
B7 = PeriodicSequence(2, (1, 0, 0, 1, 0, 1, 1))


def test_is_prime_small_values():
    primes = [i for i in range(60) if is_prime(i)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert is_prime(7919)
    assert not is_prime(7917)


def test_periodic_sequence_validation():
    with pytest.raises(ValueError):
        PeriodicSequence(4, (0, 1, 2, 3))
    with pytest.raises(ValueError):
        PeriodicSequence(2, (0, 1, 2))
    with pytest.raises(ValueError):
        PeriodicSequence(2, ())


def test_cyclic_indexing():
    assert A7[0] == 1
    assert A7[7] == 1
    assert A7[-1] == 0
    assert A7[703] == A7[703 % 7]


def test_left_shift_known_values():
    assert left_shift(A7, 0) == A7
    assert left_shift(A7, 1).values == (0, 0, 1, 1, 1, 0, 1)
    assert left_shift(A7, 7) == A7
    assert left_shift(A7, -1) == left_shift(A7, 6)


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_left_shift_composes(i, j):
    assert left_shift(left_shift(B7, i), j) == left_shift(B7, i + j)


def test_shift_equivalence_basic():
    assert shift_equivalence(A7, A7) == 0
    for k in range(1, 7):
        assert shift_equivalence(left_shift(A7, k), A7) == k
        assert shift_equivalence(A7, left_shift(A7, k)) == 7 - k
    assert shift_equivalence(A7, left_shift(A7, 2)) == 5
    assert shift_equivalence(A7, B7) is None


def test_shift_equivalence_smallest_k():
    const = PeriodicSequence(2, (1, 1, 1, 1))
    assert shift_equivalence(const, const) == 0
    # Minimal period 2 inside declared period 4: the class representative.
    alt = PeriodicSequence(2, (1, 0, 1, 0))
    assert shift_equivalence(left_shift(alt, 3), alt) == 1


def test_shift_equivalence_rejects_mismatch():
    with pytest.raises(ValueError):
        shift_equivalence(A7, PeriodicSequence(2, (1, 0)))
    with pytest.raises(ValueError):
        shift_equivalence(A7, PeriodicSequence(3, (1, 0, 2, 1, 0, 2, 1)))


def test_shift_equivalence_large_modulus_route():
    # Moduli above 256 take the tuple-scan path instead of the bytes path.
    base = PeriodicSequence(257, tuple(range(0, 200, 7)))
    assert shift_equivalence(left_shift(base, 11), base) == 11
    assert shift_equivalence(base, left_shift(base, 11)) == base.period - 11


def test_add_pointwise():
    s = add_pointwise(A7, B7)
    assert s.values == tuple((x + y) % 2 for x, y in zip(A7.values, B7.values))
    with pytest.raises(ValueError):
        add_pointwise(A7, PeriodicSequence(3, (0, 1, 2)))


def test_add_pointwise_lcm_period():
    x = PeriodicSequence(2, (1, 0))
    y = PeriodicSequence(2, (1, 1, 0))
    assert add_pointwise(x, y).period == 6


def test_lfsr_spec_validation():
    with pytest.raises(ValueError):
        LfsrSpec(3, (1, 0, 1), (1, 0, 0))  # poly too short
    with pytest.raises(ValueError):
        LfsrSpec(3, (0, 0, 1, 1), (1, 0, 0))  # leading coefficient 0
    with pytest.raises(ValueError):
        LfsrSpec(3, (1, 0, 1, 0), (1, 0, 0))  # constant term 0
    with pytest.raises(ValueError):
        LfsrSpec(3, (1, 0, 1, 1), (0, 0, 0))  # all-zero state


def test_gen_mseq_worked_registers():
    b = gen_mseq(LfsrSpec(3, (1, 0, 1, 1), (1, 0, 0)))
    assert b == B7
    a = gen_mseq(LfsrSpec(3, (1, 1, 0, 1), (1, 0, 0)))
    assert a == A7


def test_gen_mseq_rejects_non_primitive():
    # x^4 + x^3 + x^2 + x + 1 divides x^5 - 1, so its register closes early.
    with pytest.raises(ValueError):
        gen_mseq(LfsrSpec(4, (1, 1, 1, 1, 1), (1, 0, 0, 0)))


def test_primitive_poly_table_periods():
    for n, poly in PRIMITIVE_POLYS.items():
        spec = LfsrSpec(n, tuple(int(c) for c in poly), (1,) + (0,) * (n - 1))
        seq = gen_mseq(spec)
        assert seq.period == 2**n - 1


def test_gen_mseq_state_shifts_not_content():
    one = gen_mseq(LfsrSpec(3, (1, 0, 1, 1), (1, 0, 0)))
    other = gen_mseq(LfsrSpec(3, (1, 0, 1, 1), (0, 1, 1)))
    assert shift_equivalence(one, other) is not None


def test_gen_legendre_known_values():
    assert gen_legendre(7).values == (0, 1, 1, 0, 1, 0, 0)
    assert gen_legendre(7, 1).values == (1, 1, 1, 0, 1, 0, 0)
    with pytest.raises(ValueError):
        gen_legendre(9)
    with pytest.raises(ValueError):
        gen_legendre(2)


def test_gen_legendre_balance():
    for v in (7, 11, 19, 23):
        seq = gen_legendre(v)
        assert sum(seq.values) == (v - 1) // 2


def test_parse_format_compact():
    assert parse_sequence("1001110") == A7
    assert format_sequence(A7) == "1001110"
    assert parse_sequence("0,1,2", 3).values == (0, 1, 2)


def test_parse_format_wide_modulus():
    seq = PeriodicSequence(11, (0, 10, 3))
    text = format_sequence(seq)
    assert text == "0,10,3"
    assert parse_sequence(text, 11) == seq


def test_parse_rejects_bad_text():
    with pytest.raises(ValueError):
        parse_sequence("102")  # 2 out of range for modulus 2
    with pytest.raises(ValueError):
        parse_sequence("")
    with pytest.raises(ValueError):
        parse_sequence("1,x,0", 2)


@given(st.lists(st.integers(0, 4), min_size=1, max_size=40))
def test_parse_format_roundtrip(vals):
    seq = PeriodicSequence(5, tuple(vals))
    assert parse_sequence(format_sequence(seq), 5) == seq
