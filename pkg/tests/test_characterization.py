"""Relation sweeps and the three constructive characterizations."""

import pytest

from odious import digits
from odious.characterization import (
    RELATION_IDS,
    ConstructionError,
    ConstructionState,
    construct_offset,
    construct_parity,
    search_partition_solutions,
    verify_relations,
)
from odious.sequences import evil, odious


def test_relation_spot_values():
    assert odious(odious(2)) == 8 == 2 * odious(2)
    assert odious(odious(0)) == 2 == evil(odious(0)) - 1
    assert odious(evil(1)) - evil(odious(1)) == 2 == 4 * digits.t(1, 2) - 2


def test_relations_all_pass():
    reports = verify_relations(2000)
    assert tuple(r.identity for r in reports) == RELATION_IDS
    for report in reports:
        assert report.passed
        assert report.first_counterexample is None
        assert report.checked == 2001


def test_relations_reject_negative_bound():
    with pytest.raises(ValueError):
        verify_relations(-1)


def test_construct_examples():
    assert construct_parity(0) == ((), ())
    assert construct_parity(1) == ((1,), (0,))
    assert construct_parity(4) == ((1, 2, 4, 7), (0, 3, 5, 6))
    assert construct_offset(0) == ((), ())
    assert construct_offset(2) == ((1, 2), (0, 3))
    assert construct_offset(4) == ((1, 2, 4, 7), (0, 3, 5, 6))


def test_constructions_reproduce_closed_forms():
    expected = (
        tuple(odious(n) for n in range(10**4)),
        tuple(evil(n) for n in range(10**4)),
    )
    assert construct_parity(10**4) == expected
    assert construct_offset(10**4) == expected


@pytest.mark.parametrize(
    "step", [ConstructionState.step_parity, ConstructionState.step_offset]
)
def test_intermediate_states_stay_consistent(step):
    state = ConstructionState()
    for _ in range(300):
        step(state)
        assert all(a < b for a, b in zip(state.x, state.x[1:]))
        assert all(a < b for a, b in zip(state.y, state.y[1:]))
        assert set(state.x).isdisjoint(state.y)
        assert state.used == set(state.x) | set(state.y)
        assert state.used == set(range(2 * len(state.x)))  # no gaps below frontier
        assert all(state.membership[v] == "x" for v in state.x)
        assert all(state.membership[v] == "y" for v in state.y)


def test_corrupted_state_fails_loudly():
    state = ConstructionState()
    del state.membership[1]
    with pytest.raises(ConstructionError):
        state.step_parity()
    state = ConstructionState()
    state.used.add(3)  # forces candidates 2 and 4: same parity, not consecutive
    with pytest.raises(ConstructionError):
        state.step_parity()
    state = ConstructionState()
    state.used.add(3)
    with pytest.raises(ConstructionError):
        state.step_offset()


def test_search_smallest_prefix():
    assert search_partition_solutions(1).solutions == (((0,), (1,)), ((1,), (0,)))


def test_search_finds_exactly_the_swap_pair():
    for count in range(1, 13):
        a = tuple(odious(n) for n in range(count))
        b = tuple(evil(n) for n in range(count))
        solutions = search_partition_solutions(count).solutions
        assert solutions == tuple(sorted(((a, b), (b, a))))


def test_solutions_pair_adjacent_values():
    for count in (6, 11, 16):
        for xs, ys in search_partition_solutions(count).solutions:
            for n in range(count // 2):
                assert {xs[n], ys[n]} == {2 * n, 2 * n + 1}


def test_solution_differences_trace_the_letters():
    for xs, ys in search_partition_solutions(10).solutions:
        diffs = tuple(x - y for x, y in zip(xs, ys))
        letters = tuple(1 - 2 * digits.t(n, 2) for n in range(10))
        negated = tuple(-v for v in letters)
        assert diffs in (letters, negated)


def test_solution_indicator_satisfies_letter_recurrences():
    # alpha(n) = 2n + 1 - x(n) obeys alpha(2m) = alpha(m), alpha(2m+1) = 1 - alpha(m)
    for xs, _ys in search_partition_solutions(12).solutions:
        alpha = [2 * n + 1 - x for n, x in enumerate(xs)]
        assert set(alpha) <= {0, 1}
        for m in range(len(alpha)):
            if 2 * m < len(alpha):
                assert alpha[2 * m] == alpha[m]
            if 2 * m + 1 < len(alpha):
                assert alpha[2 * m + 1] == 1 - alpha[m]


def test_search_budget_and_domain():
    with pytest.raises(ValueError):
        search_partition_solutions(0)
    with pytest.raises(ValueError):
        search_partition_solutions(25)
    with pytest.raises(ValueError):
        construct_parity(-1)
