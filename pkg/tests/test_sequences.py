"""Closed-form terms, membership, rank, and the nesting identity."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from odious import digits
from odious.oracle import oracle_terms
from odious.sequences import (
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

A16 = (1, 2, 4, 7, 8, 11, 13, 14, 16, 19, 21, 22, 25, 26, 28, 31)
B16 = (0, 3, 5, 6, 9, 10, 12, 15, 17, 18, 20, 23, 24, 27, 29, 30)


def test_golden_sixteen_terms():
    assert tuple(odious(n) for n in range(16)) == A16
    assert tuple(evil(n) for n in range(16)) == B16


def test_term_examples():
    assert term((1, 2), 3) == 7
    assert term((0, 2), 1) == 3
    assert term((0, 3), 4) == 13


def test_binary_class_examples():
    assert odious(4) == 8
    assert evil(0) == 0
    assert odious(15) == 31


def test_binary_closed_forms():
    for n in range(10**4):
        tn = digits.t(n, 2)
        assert odious(n) == 2 * n + 1 - tn
        assert evil(n) == 2 * n + tn


def test_term_alternative_block_form():
    # d*n + d - 1 - t(d*n + d - 1 - j) reflects the same term; the reflection
    # index is the class index j itself
    for d in range(2, 9):
        for j in range(d):
            spec = SequenceSpec(j, d)
            for n in range(2000):
                alt = d * n + d - 1 - digits.t(d * n + d - 1 - j, d)
                assert term(spec, n) == alt


def test_terms_match_oracle_filter():
    for d in range(2, 9):
        for j in range(d):
            expected = oracle_terms((j, d), 400)
            assert [term((j, d), n) for n in range(400)] == expected


def test_membership_examples():
    assert is_member(7, (1, 2))
    for d in (2, 3, 8):
        assert is_member(0, (0, d))
    assert not is_member(9, (1, 2))


def test_every_term_is_a_member():
    for d in (2, 3, 5, 8):
        for j in range(d):
            spec = SequenceSpec(j, d)
            for n in range(500):
                assert is_member(term(spec, n), spec)


@given(
    st.integers(min_value=0, max_value=10**15),
    st.integers(min_value=2, max_value=40),
    st.data(),
)
def test_terms_strictly_increase(n, d, data):
    j = data.draw(st.integers(min_value=0, max_value=d - 1))
    assert term((j, d), n + 1) > term((j, d), n)


def test_classes_partition_the_integers():
    for d in range(2, 9):
        specs = [SequenceSpec(j, d) for j in range(d)]
        for k in range(10**5 + 1):
            assert sum(is_member(k, spec) for spec in specs) == 1


def test_rank_examples_and_roundtrip():
    assert rank(7, (1, 2)) == 3
    for d in (2, 5):
        assert rank(0, (0, d)) == 0
    assert rank(26, (0, 3)) == 8
    for d in (2, 3, 8):
        for j in range(d):
            for n in range(300):
                assert rank(term((j, d), n), (j, d)) == n
    for k in range(3000):
        spec = (digits.t(k, 2), 2)
        assert term(spec, rank(k, spec)) == k


def test_rank_rejects_non_members_naming_the_class():
    with pytest.raises(ValueError, match=r"class 0 \(mod 2\), not 1"):
        rank(9, (1, 2))


def test_compose_examples():
    assert compose(1, 1, 2, 2) == 8
    assert compose(1, 0, 2, 1) == 7
    assert compose(0, 1, 2, 0) == 3


def test_compose_equals_nested_terms():
    for d in range(2, 6):
        for n in range(300):
            for i in range(d):
                inner = term((i, d), n)
                for j in range(d):
                    assert compose(j, i, d, n) == term((j, d), inner)


def test_class_offset_relation_to_a_million():
    # a(n) - b(n) = 1 - 2 t(n)
    for n in range(10**6 + 1):
        assert odious(n) - evil(n) == 1 - 2 * digits.t(n, 2)


def test_nested_offset_relation():
    # a(b(n)) - b(a(n)) = 4 t(n) - 2
    for n in range(10**5 + 1):
        assert odious(evil(n)) - evil(odious(n)) == 4 * digits.t(n, 2) - 2


def test_spec_validation_and_coercion():
    with pytest.raises(ValueError):
        SequenceSpec(2, 2)
    with pytest.raises(ValueError):
        SequenceSpec(0, 1)
    assert SequenceSpec.coerce((1, 2)) == ODIOUS
    assert SequenceSpec.coerce(EVIL) is EVIL


def test_term_range_bulk_matches_scalar():
    values = term_range((1, 3), 50, start=20)
    assert list(values) == [term((1, 3), n) for n in range(20, 70)]


def test_term_overflow_is_loud():
    with pytest.raises(OverflowError):
        term((1, 2), 2**62)
    with pytest.raises(OverflowError):
        compose(1, 1, 2, 2**61)
