import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graph
from oracles import brute_min_set, random_udg
from udgdom.mis import check_independent_maximal, maximal_independent_set, mis_invariant_violations


def test_path(path3):
    d = maximal_independent_set(path3)
    assert d.members == (0, 2)
    assert check_independent_maximal(path3, d)


def test_single(single):
    assert maximal_independent_set(single).members == (0,)


def test_triangle_keeps_first_vertex():
    g = graph([(0, 0), (0.5, 0), (0.25, 0.4)])
    d = maximal_independent_set(g)
    assert d.members == (0,)
    assert check_independent_maximal(g, d)


def test_checker(path3):
    assert check_independent_maximal(path3, [0, 2])
    assert not check_independent_maximal(path3, [0])
    assert not check_independent_maximal(path3, [0, 1])


def test_per_cell_store_matches_members(path3):
    rng = np.random.default_rng(3)
    g = random_udg(rng, 40, side=6, no_isolated=False)
    d = maximal_independent_set(g)
    stored = sorted(v for vs in d.cells.values() for v in vs)
    assert stored == list(d.members)
    for v in range(g.n):
        assert d.members_near(v) == [u for u in g.adjacency[v] if u in d]


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 80), st.floats(1.0, 9.0), st.integers(0, 2**32 - 1))
def test_independent_maximal_and_packing(n, side, seed):
    g = random_udg(np.random.default_rng(seed), n, side=side, no_isolated=False)
    d = maximal_independent_set(g)
    assert check_independent_maximal(g, d)
    assert mis_invariant_violations(g, d) == []


def test_five_times_domination_number():
    rng = np.random.default_rng(77)
    worst = 0
    for _ in range(60):
        n = int(rng.integers(4, 15))
        g = random_udg(rng, n, no_isolated=False)
        gamma, _ = brute_min_set(g, closed=True)
        size = len(maximal_independent_set(g))
        assert size <= 5 * gamma
        worst = max(worst, size / gamma)
    assert worst >= 1
