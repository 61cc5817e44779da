import random

import pytest
from hypothesis import given, strategies as st

from brute import graphical, partitions
from forcibly.criteria import (conjugate, eg_runs, eg_sorted, is_graphical_eg, is_graphical_eg_naive,
                               is_graphical_hh, nash_williams, potentially_k_connected)
from forcibly.errors import KTooLarge
from forcibly.oracle import all_realizations_k_connected
from forcibly.enumeration import gen_zero_free_sequences
from forcibly.seqcore import to_run_length


@pytest.mark.parametrize("d, expected", [
    ((3, 3, 3, 3, 2, 2, 2), True),
    ((1, 1), True),
    ((3, 3, 1, 1), False),
    ((4, 4, 3, 3, 3, 1), True),
])
def test_erdos_gallai(d, expected):
    assert is_graphical_eg(d) is expected
    assert is_graphical_eg_naive(d) is expected


@pytest.mark.parametrize("d, expected", [((2, 2, 2), True), ((3, 2, 2, 2, 1), True), ((3, 3, 2), False),
                                         ((3, 3, 1, 1), False)])
def test_havel_hakimi(d, expected):
    assert is_graphical_hh(d) is expected


@pytest.mark.parametrize("d, expected", [((3, 3, 3, 3), True), ((3, 3, 1, 1), False),
                                         ((6, 6, 6, 5, 5, 5, 5, 4, 4), True)])
def test_nash_williams(d, expected):
    assert nash_williams(d) is expected


def test_conjugate():
    c = conjugate((4, 4, 3, 3, 3, 1))
    assert c.parts == (6, 5, 5, 2)
    assert c.durfee == 3
    assert conjugate((3, 3, 3, 3)).parts[0] == 4


def test_zeros_ignored():
    for d in [(2, 2, 2, 0, 0), (1, 1, 0), (3, 3, 1, 1, 0)]:
        stripped = tuple(x for x in d if x)
        assert is_graphical_eg(d) == is_graphical_eg(stripped)
        assert is_graphical_hh(d) == is_graphical_hh(stripped)
        assert nash_williams(d) == nash_williams(stripped)
    assert is_graphical_eg((0, 0)) and is_graphical_hh((0,))


def test_three_way_and_naive_agree_small():
    for N in range(0, 19, 1):
        for d in partitions(N):
            ref = graphical(d)
            assert is_graphical_eg(d) == ref
            assert is_graphical_hh(d) == ref
            assert nash_williams(d) == ref
            r = to_run_length(d) if d else None
            if r is not None:
                assert eg_runs(r.values, r.counts) == ref


@given(st.lists(st.integers(0, 12), min_size=1, max_size=14))
def test_odd_sum_is_never_graphical(d):
    if sum(d) % 2:
        assert not is_graphical_eg(d) and not is_graphical_hh(d) and not nash_williams(d)


@given(st.lists(st.integers(0, 25), min_size=1, max_size=30))
def test_linear_eg_matches_naive(d):
    assert is_graphical_eg(d) == is_graphical_eg_naive(d)
    s = sorted(d, reverse=True)
    assert eg_sorted(s) == is_graphical_eg_naive(d)


@pytest.mark.parametrize("d, k, expected", [
    ((2, 2, 1, 1), 1, True),
    ((1, 1, 1, 1), 1, False),
    ((3, 3, 3, 3, 2, 2, 2), 1, True),
    ((2, 2, 2, 2), 2, True),
])
def test_potentially_k_connected(d, k, expected):
    assert potentially_k_connected(d, k) is expected


def test_k_too_large():
    with pytest.raises(KTooLarge):
        potentially_k_connected((1, 1), 2)


def test_k1_specialization():
    rng = random.Random(5)
    for _ in range(500):
        n = rng.randint(2, 15)
        d = sorted((rng.randint(1, n - 1) for _ in range(n)), reverse=True)
        if not is_graphical_eg(d):
            continue
        assert potentially_k_connected(d, 1) == (sum(d) >= 2 * n - 2)


def _potentially_oracle(d, k):
    # some realization is k-connected
    from forcibly.oracle import realizations
    return any(g.is_k_connected(k) for g in realizations(d, up_to_symmetry=True))


def test_potential_connectivity_against_oracle_and_monotone():
    for n in range(2, 9):
        for d in gen_zero_free_sequences(n):
            for k in range(1, min(3, n - 1) + 1):
                got = potentially_k_connected(d, k)
                assert got == _potentially_oracle(d, k), (d, k)
                if k > 1 and got:
                    assert potentially_k_connected(d, k - 1)
