from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graph
from oracles import brute_min_roman, brute_min_set, random_udg
from udgdom.approx import (
    TDS_FACTOR,
    TRDS_FACTOR,
    RomanAssignment,
    read_solution,
    tds_udg_sc,
    trdf_udg_sc,
    verify_tds,
    verify_trdf,
    write_solution,
)
from udgdom.errors import IsolatedVertexError, UDGDomError
from udgdom.mis import check_independent_maximal, maximal_independent_set


def test_factors():
    assert TDS_FACTOR == Fraction(44, 9) + Fraction(137, 60)
    assert TRDS_FACTOR == Fraction(44, 9) + Fraction(137, 120)
    assert round(float(TDS_FACTOR), 2) == 7.17
    assert round(float(TRDS_FACTOR), 2) == 6.03


def test_tds_path(path3):
    s = tds_udg_sc(path3)
    assert s.members == (0, 1, 2)
    assert s.independent == (0, 2) and s.connectors == (1,)
    assert verify_tds(path3, s)
    gamma_t, _ = brute_min_set(path3, closed=False)
    assert gamma_t == 2
    assert Fraction(len(s), gamma_t) <= TDS_FACTOR


def test_tds_edge(edge):
    assert tds_udg_sc(edge).members == (0, 1)


def test_trdf_path(path3):
    f = trdf_udg_sc(path3)
    assert f.values == (2, 1, 2)
    assert f.weight == 5
    assert verify_trdf(path3, f)
    gamma_tr, _ = brute_min_roman(path3, total=True)
    assert gamma_tr == 3


def test_trdf_edge(edge):
    f = trdf_udg_sc(edge)
    assert f.values == (2, 1) and f.weight == 3
    gamma_tr, witness = brute_min_roman(edge, total=True)
    assert (gamma_tr, witness) == (2, (1, 1))


def test_isolated_vertex_rejected():
    g = graph([(0, 0), (0.5, 0), (5, 5)])
    for algo in (tds_udg_sc, trdf_udg_sc):
        with pytest.raises(IsolatedVertexError) as err:
            algo(g)
        assert err.value.vertices == [2]


def test_verify_tds_examples(path3):
    assert verify_tds(path3, [0, 1, 2])
    assert not verify_tds(path3, [0, 2])
    assert not verify_tds(path3, [1])


def test_verify_trdf_examples(path3):
    assert verify_trdf(path3, [2, 1, 2])
    assert not verify_trdf(path3, [2, 0, 0])
    assert not verify_trdf(path3, [1, 1, 0])
    assert not verify_trdf(path3, [1, 1])


def test_roman_labels_checked():
    with pytest.raises(UDGDomError):
        RomanAssignment((0, 3))
    f = RomanAssignment((2, 1, 0, 2))
    assert f.level(2) == (0, 3) and f.level(1) == (1,) and f.weight == 5


def test_disconnected_graph_allowed():
    # two far-apart K2 components and a triangle
    g = graph([(0, 0), (0.5, 0), (10, 10), (10.5, 10), (20, 0), (20.5, 0), (20.2, 0.4)])
    assert verify_tds(g, tds_udg_sc(g))
    assert verify_trdf(g, trdf_udg_sc(g))


def test_random_20_point_tds_ratio():
    rng = np.random.default_rng(20)
    g = random_udg(rng, 20, side=3.0)
    s = tds_udg_sc(g)
    assert verify_tds(g, s)
    from udgdom.exact import exact_min_tds

    assert Fraction(len(s), exact_min_tds(g).objective) <= TDS_FACTOR


def test_random_15_point_trdf_ratio():
    rng = np.random.default_rng(15)
    g = random_udg(rng, 15, side=3.0)
    f = trdf_udg_sc(g)
    assert verify_trdf(g, f)
    from udgdom.exact import exact_min_trdf

    assert Fraction(f.weight, exact_min_trdf(g, limit=15).objective) <= TRDS_FACTOR


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 60), st.integers(0, 2**32 - 1))
def test_outputs_verify_and_decompose(n, seed):
    g = random_udg(np.random.default_rng(seed), n)
    s = tds_udg_sc(g)
    assert verify_tds(g, s)
    d = maximal_independent_set(g)
    assert s.independent == d.members
    assert check_independent_maximal(g, s.independent)
    assert not set(s.connectors) & set(s.independent)
    assert set(s.members) == set(s.independent) | set(s.connectors)

    f = trdf_udg_sc(g)
    assert verify_trdf(g, f)
    assert f.level(2) == d.members
    assert f.level(1) == s.connectors
    assert f.weight == 2 * len(d) + len(s.connectors)


def test_solution_files_round_trip(tmp_path, path3):
    p = tmp_path / "tds.json"
    write_solution(p, "tds", tds_udg_sc(path3))
    problem, sol = read_solution(p)
    assert problem == "tds" and verify_tds(path3, sol)
    p = tmp_path / "trds.json"
    write_solution(p, "trds", trdf_udg_sc(path3))
    assert p.read_text() == '{"problem": "trds", "values": [2, 1, 2], "weight": 5}\n'
    problem, f = read_solution(p)
    assert problem == "trds" and verify_trdf(path3, f)
