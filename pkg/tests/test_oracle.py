import pytest

from forcibly.errors import TooLarge
from forcibly.oracle import SmallGraph, all_realizations_k_connected, has_disconnected_realization, realizations


def _labeled(d):
    return list(realizations(d))


def test_realization_counts():
    assert len(_labeled((1, 1))) == 1
    assert len(_labeled((2, 2, 2))) == 1
    assert len(_labeled((1, 1, 1, 1))) == 3
    assert len(_labeled((2,) * 6)) == 70


def test_two_regular_six_has_cycle_and_triangles():
    gs = _labeled((2,) * 6)
    assert any(g.is_connected() for g in gs)
    assert any(not g.is_connected() for g in gs)


def test_realizations_distinct_and_correct():
    for d in [(3, 3, 2, 2, 2), (3, 3, 3, 3, 2, 2, 2), (4, 3, 3, 2, 2, 2)]:
        gs = _labeled(d)
        assert len({g.rows for g in gs}) == len(gs)
        for g in gs:
            assert g.degrees() == list(d)
            assert all(not (g.rows[v] >> v) & 1 for v in range(g.n))


def test_symmetry_mode_is_subset():
    d = (3, 3, 3, 3, 2, 2, 2)
    full = {g.rows for g in realizations(d)}
    reduced = [g.rows for g in realizations(d, up_to_symmetry=True)]
    assert set(reduced) <= full
    assert len(reduced) < len(full)


@pytest.mark.parametrize("d, k, expected", [
    ((3, 3, 3, 3, 2, 2, 2), 1, False),
    ((6, 6, 6, 5, 5, 5, 5, 4, 4), 1, True),
    ((2, 2, 2, 2), 2, True),
    ((1, 1, 1, 1), 1, False),
])
def test_verdict_examples(d, k, expected):
    assert all_realizations_k_connected(d, k) is expected


def test_self_consistency():
    from brute import zero_free_graphical
    for n in range(2, 8):
        for d in zero_free_graphical(n):
            for k in (2, 3):
                if all_realizations_k_connected(d, k):
                    assert all_realizations_k_connected(d, k - 1)


def test_limits():
    with pytest.raises(TooLarge):
        all_realizations_k_connected((2,) * 17)
    with pytest.raises(TooLarge):
        all_realizations_k_connected((2,) * 13, 2)
    with pytest.raises(ValueError):
        all_realizations_k_connected((2, 2, 2), 4)
    assert has_disconnected_realization((1, 1, 1, 1))


def test_small_graph_cuts():
    path = SmallGraph(3, (0b010, 0b101, 0b010))
    assert path.is_k_connected(1) and not path.is_k_connected(2)
    assert path.edges() == [(0, 1), (1, 2)]
