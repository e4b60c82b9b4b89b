import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graph
from oracles import all_pairs_adjacency
from udgdom.errors import UDGDomError
from udgdom.geometry import (
    Point2D,
    PointSet,
    block_around,
    build_udg,
    dumps_instance,
    isolated_vertices,
    loads_instance,
    neighbors,
)


def test_single_edge():
    g = graph([(0, 0), (0.5, 0)])
    assert g.edges() == [(0, 1)]


def test_path_has_no_long_edge(path3):
    assert path3.edges() == [(0, 1), (1, 2)]
    assert not path3.has_edge(0, 2)


def test_distance_exactly_radius_is_an_edge():
    assert graph([(0, 0), (1, 0)]).edges() == [(0, 1)]


def test_neighbors(path3, single):
    assert neighbors(path3, 1) == [0, 2]
    assert neighbors(single, 0) == []
    with pytest.raises(IndexError):
        neighbors(path3, 3)


def test_isolated_vertices():
    assert isolated_vertices(graph([(0, 0), (3, 0)])).isolated == (0, 1)
    assert isolated_vertices(graph([(0, 0), (0.5, 0)])).isolated == ()


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_rejects_non_finite(bad):
    with pytest.raises(UDGDomError):
        Point2D(bad, 0.0)
    with pytest.raises(UDGDomError):
        PointSet.from_coords([(0, 0), (1, bad)])


def test_rejects_empty_and_bad_radius():
    with pytest.raises(UDGDomError):
        build_udg(PointSet(()))
    with pytest.raises(UDGDomError):
        PointSet.from_coords([(0, 0)], radius=0)


def test_random_50_in_5x5_matches_all_pairs():
    rng = np.random.default_rng(2024)
    xy = rng.uniform(0, 5, size=(50, 2)).tolist()
    g = graph(xy)
    assert list(g.adjacency) == all_pairs_adjacency(xy)


def test_random_30_neighbors_match_oracle():
    rng = np.random.default_rng(30)
    xy = rng.uniform(0, 4, size=(30, 2)).tolist()
    g = graph(xy)
    oracle = all_pairs_adjacency(xy)
    for v in range(30):
        assert neighbors(g, v) == list(oracle[v])


def test_random_isolated_matches_degree_count():
    rng = np.random.default_rng(5)
    xy = rng.uniform(0, 8, size=(40, 2)).tolist()
    oracle = all_pairs_adjacency(xy)
    expected = tuple(i for i, a in enumerate(oracle) if not a)
    assert expected  # the sparse box should leave some vertices alone
    assert isolated_vertices(graph(xy)).isolated == expected


coords = st.lists(
    st.tuples(
        st.floats(-6, 6, allow_nan=False, allow_infinity=False),
        st.floats(-6, 6, allow_nan=False, allow_infinity=False),
    ),
    min_size=1,
    max_size=60,
)
radii = st.sampled_from([0.5, 1.0, 1.7])


@settings(max_examples=150, deadline=None)
@given(coords, radii)
def test_bucketed_adjacency_equals_naive(xy, r):
    g = graph(xy, r)
    assert list(g.adjacency) == all_pairs_adjacency(xy, r)


@settings(max_examples=100, deadline=None)
@given(coords, radii)
def test_symmetry_and_bucket_locality(xy, r):
    g = graph(xy, r)
    for i, nb in enumerate(g.adjacency):
        assert i not in nb
        assert list(nb) == sorted(nb)
        block = set(block_around(g.cells[i]))
        for j in nb:
            assert i in g.adjacency[j]
            assert g.cells[j] in block
    seen = [v for vs in g.buckets.values() for v in vs]
    assert sorted(seen) == list(range(g.n))
    for c, vs in g.buckets.items():
        assert all(g.cells[v] == c for v in vs)


def test_instance_round_trip_is_exact():
    rng = np.random.default_rng(11)
    ps = PointSet.from_coords(rng.uniform(0, 4, size=(20, 2)).tolist(), 1.0)
    text = dumps_instance(ps)
    back = loads_instance(text)
    assert back == ps
    assert dumps_instance(back) == text


def test_instance_malformed():
    with pytest.raises(UDGDomError):
        loads_instance('{"points": [[0, 0, 1]]}')
    with pytest.raises(UDGDomError):
        loads_instance("not json")
    with pytest.raises(UDGDomError):
        loads_instance('{"points": [[0, NaN]]}')


def test_rounding_boundary_pair_is_decided_exactly():
    # exact distance is 1 + 1e-134: float squares round it to 1, rationals do not
    g = graph([(0.0, 1.0), (0.0, -1.1394410304212553e-134)])
    assert g.edges() == []
    g = graph([(0.0, 1.0), (0.0, 0.0)])
    assert g.edges() == [(0, 1)]
