import logging

import numpy as np
import pytest

from uniprof import (Graph, Tournament, CliqueSpec, graph_from_edges,
                     tournament_from_arcs, complement, reverse, induce,
                     config_context, get_config)
from uniprof.constructions import circular_tournament, random_tournament
from uniprof.constructions import random_graph
from uniprof.exceptions import InputError, WorkCapExceeded
from uniprof.utils.bitset import pack_rows


def test_graph_from_edges():
    g = graph_from_edges(4, [(0, 1), (2, 1), (1, 0), (3, 2)])
    assert g.n == 4
    assert g.m == 3
    assert g.degrees.tolist() == [1, 2, 2, 1]
    assert g.has_edge(1, 2) and g.has_edge(2, 1)
    assert not g.has_edge(0, 3)
    assert g.edges().tolist() == [[0, 1], [1, 2], [2, 3]]
    assert g.neighbors(1).tolist() == [0, 2]
    assert not g.rows.flags.writeable


def test_graph_errors():
    with pytest.raises(InputError) as e:
        graph_from_edges(3, [(0, 1), (1, 1)])
    assert e.value.index == 1
    assert e.value.pair == (1, 1)
    with pytest.raises(InputError):
        graph_from_edges(3, [(0, 3)])
    dense = np.zeros((3, 3), dtype=bool)
    dense[0, 1] = True
    with pytest.raises(InputError):
        Graph(3, pack_rows(dense))


def test_tournament_from_arcs():
    t = tournament_from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    assert t.out_degrees.tolist() == [1, 1, 1]
    assert t.beats(2, 0) and not t.beats(0, 2)
    assert t.arcs().tolist() == [[0, 1], [1, 2], [2, 0]]


def test_tournament_errors():
    with pytest.raises(InputError) as e:
        tournament_from_arcs(3, [(0, 1), (1, 2), (0, 1)])
    assert e.value.index == 2
    assert "twice" in str(e.value)
    with pytest.raises(InputError) as e:
        tournament_from_arcs(3, [(0, 1), (1, 2), (1, 0)])
    assert e.value.index == 2
    assert "both orientations" in str(e.value)
    with pytest.raises(InputError) as e:
        tournament_from_arcs(3, [(0, 1), (1, 2)])
    assert e.value.pair == (0, 2)
    dense = np.ones((3, 3), dtype=bool) & ~np.eye(3, dtype=bool)
    with pytest.raises(InputError):
        Tournament(3, pack_rows(dense))


def test_complement_reverse():
    g = random_graph(70, 0.3, 2)
    c = complement(g)
    assert c.m == 70 * 69 // 2 - g.m
    assert complement(c) == g
    t = random_tournament(70, 2)
    r = reverse(t)
    assert np.array_equal(r.out_degrees, t.in_degrees)
    assert reverse(r) == t
    with pytest.raises(InputError):
        complement(t)


def test_induce():
    c5 = circular_tournament(5)
    sub = induce(c5, [0, 1, 3])
    assert sub.beats(0, 1) and sub.beats(1, 2) and sub.beats(2, 0)
    assert induce(c5, range(5)) == c5
    g = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert induce(g, [3, 2, 0]).edges().tolist() == [[0, 1]]
    with pytest.raises(InputError):
        induce(g, [0, 0])
    with pytest.raises(InputError):
        induce(g, [4])


def test_digest():
    g = random_graph(30, 0.5, 0)
    assert g.digest() == random_graph(30, 0.5, 0).digest()
    assert g.digest() != complement(g).digest()


def test_clique_spec():
    spec = CliqueSpec([0.2, 0.0, 0.5])
    assert spec.alphas == (0.5, 0.2)
    assert spec.beta == pytest.approx(0.3)
    assert spec.r == 2
    assert CliqueSpec([0.5, 0.5], 0.0).beta == 0.0
    with pytest.raises(InputError):
        CliqueSpec([0.7, 0.5])
    with pytest.raises(InputError):
        CliqueSpec([0.5], 0.2)
    with pytest.raises(InputError):
        CliqueSpec([-0.1])


def test_limits():
    with config_context(max_vertices=10):
        assert get_config()["max_vertices"] == 10
        with pytest.raises(WorkCapExceeded):
            graph_from_edges(11, [])
    assert get_config()["max_vertices"] == 20000


def test_builder_logging(caplog):
    with caplog.at_level(logging.DEBUG, logger="uniprof.base"):
        graph_from_edges(3, [(0, 1), (1, 2)])
        tournament_from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    assert "graph from 2 edges: Graph(n=3, m=2)" in caplog.text
    assert "tournament from 3 arcs on 3 vertices" in caplog.text
