import logging
from math import comb

import numpy as np
import pytest

from uniprof import CliqueSpec, config_context
from uniprof.constructions import (apportion, clique_sizes, clique_union,
                                   extremal_rho_graph, circular_tournament,
                                   transitive_tournament, random_tournament,
                                   random_graph, tyomkyn_level, tyomkyn_graph)
from uniprof.exceptions import InputError, WorkCapExceeded
from uniprof.extremal import solve_cubic_theta
from uniprof.profiles import profile3_graph, triangle_count


def test_apportion():
    assert apportion([0.5, 0.5], 3).tolist() == [2, 1]
    assert apportion([0.25, 0.25, 0.5], 10).tolist() == [3, 2, 5]
    sizes = apportion([0.3, 0.3, 0.4], 1001)
    assert sizes.sum() == 1001


def test_clique_union():
    g = clique_union(CliqueSpec([0.5, 0.25]), 8)
    assert clique_sizes(CliqueSpec([0.5, 0.25]), 8) == ((4, 2), 2)
    assert g.m == comb(4, 2) + comb(2, 2)
    assert g.degrees.tolist() == [3, 3, 3, 3, 1, 1, 0, 0]
    assert profile3_graph(g).counts[2] == 0
    with pytest.raises(InputError):
        clique_union(CliqueSpec([0.25] * 4), 3)


def test_extremal_rho_graph():
    rho = solve_cubic_theta().rho
    theta = solve_cubic_theta().theta
    spec = CliqueSpec((theta, theta, 1 - 2 * theta), 0.0)
    assert clique_sizes(spec, 4000) == ((1710, 1709, 581), 0)
    assert clique_sizes(spec, 3) == ((1, 1, 1), 0)
    g = extremal_rho_graph(4000)
    p = profile3_graph(g)
    assert p.counts[2] == 0
    p0, _, _, p3 = p.densities
    assert abs(p0 - rho) <= 2e-3
    assert abs(p3 - rho) <= 2e-3
    assert extremal_rho_graph(3).m == 0


def test_circular():
    t = circular_tournament(11)
    assert t.out_degrees.tolist() == [5] * 11
    assert t.beats(0, 5) and t.beats(10, 0) and not t.beats(0, 6)
    big = circular_tournament(1001)
    assert (big.out_degrees == 500).all()
    with pytest.raises(InputError):
        circular_tournament(4)


def test_transitive():
    t = transitive_tournament(70)
    assert t.out_degrees.tolist() == list(range(69, -1, -1))
    assert t.beats(3, 68)


def test_random_tournament():
    t = random_tournament(130, 7)
    assert t == random_tournament(130, 7)
    assert t != random_tournament(130, 8)
    with config_context(n_jobs=4):
        assert random_tournament(130, 7) == t
    assert t.out_degrees.sum() == comb(130, 2)


def test_random_graph():
    g = random_graph(150, 0.3, 11)
    assert g == random_graph(150, 0.3, 11)
    with config_context(n_jobs=3):
        assert random_graph(150, 0.3, 11) == g
    assert abs(g.m / comb(150, 2) - 0.3) < 0.03
    assert random_graph(20, 0.0, 0).m == 0
    assert random_graph(20, 1.0, 0).m == comb(20, 2)
    with pytest.raises(ValueError):
        random_graph(20, 1.5, 0)


def test_tyomkyn_levels():
    p3 = [tyomkyn_level(k).p3 for k in range(1, 5)]
    assert p3 == pytest.approx([0, 0.108696, 0.121951, 0.124398], abs=1e-6)
    assert all(a < b < 1 / 8 for a, b in zip(p3, p3[1:]))
    assert tyomkyn_level(3).triangles == 38750
    assert tyomkyn_level(10).n == 5**10


def test_tyomkyn_graphs():
    expected_triangles = [0, 250, 38750]
    for k in [1, 2, 3]:
        g = tyomkyn_graph(k)
        level = tyomkyn_level(k)
        assert g.n == level.n and g.m == level.m
        N0, N1, N2, N3 = profile3_graph(g).counts
        assert N0 == N3 and N1 == N2
        assert N3 == expected_triangles[k - 1]
        assert triangle_count(g) == level.triangles
    assert profile3_graph(tyomkyn_graph(2)).counts == (250, 900, 900, 250)
    for k, d in zip(range(1, 5), [2, 12, 62, 312]):
        assert (tyomkyn_graph(k).degrees == d).all()
    with pytest.raises(WorkCapExceeded):
        tyomkyn_graph(5)


def test_tyomkyn_logging(caplog):
    with caplog.at_level(logging.INFO, logger="uniprof.constructions"):
        tyomkyn_graph(2)
    assert "level 2 on 25 vertices" in caplog.text
