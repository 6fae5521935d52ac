import itertools
from math import comb

import networkx as nx
import numpy as np
import pytest

from uniprof import (CliqueSpec, graph_from_edges, induce, complement,
                     config_context)
from uniprof.constructions import (tyomkyn_graph, extremal_rho_graph,
                                   circular_tournament, transitive_tournament,
                                   random_tournament, random_graph,
                                   clique_union)
from uniprof.exceptions import InputError, WorkCapExceeded
from uniprof.profiles import count_k_cliques
from uniprof.universality import (is_l_universal, find_induced_path5,
                                  max_transitive, transitive_lower_bound,
                                  fox_sample, fox_trials)
from uniprof.universality.fox import sample_size


def _names(classes):
    return {c.name for c in classes}


def test_exhaustive_reports():
    rep = is_l_universal(tyomkyn_graph(1), 3)
    assert rep.universal is False
    assert _names(rep.missing) == {"P0", "P3"}
    rep = is_l_universal(extremal_rho_graph(2000), 3)
    assert _names(rep.missing) == {"P2"}
    assert rep.total == comb(2000, 3)
    rep = is_l_universal(circular_tournament(101), 4)
    assert _names(rep.missing) == {"W4", "L4"}
    rep = is_l_universal(transitive_tournament(10), 3)
    assert _names(rep.missing) == {"C3"}
    rep = is_l_universal(random_graph(200, 0.5, 7), 4)
    assert rep.universal is True
    assert rep.missing == ()
    assert not rep.sampled


def test_order5():
    rep = is_l_universal(tyomkyn_graph(2), 5)
    assert rep.universal is False
    assert rep.unseen == len(rep.missing) > 0


def test_sampled_reports():
    rep = is_l_universal(random_graph(60, 0.5, 3), 3, mode="sampled",
                         samples=5000, seed=1)
    assert rep.universal is True
    assert rep.unseen == 0
    assert rep.sampled
    rep = is_l_universal(tyomkyn_graph(1), 3, mode="sampled", samples=200)
    assert rep.universal is None
    assert _names(rep.missing) == {"P0", "P3"}
    rep = is_l_universal(random_tournament(40, 0), 7, mode="sampled",
                         samples=500)
    assert rep.universal is None
    assert rep.unseen > 0


def test_numpy_order():
    g = tyomkyn_graph(1)
    rep = is_l_universal(g, np.int64(3))
    assert rep.l == 3 and type(rep.l) is int
    assert _names(rep.missing) == {"P0", "P3"}
    rep = is_l_universal(g, np.int32(4), mode="sampled", samples=100)
    assert rep.l == 4


def test_universal_errors():
    with pytest.raises(InputError):
        is_l_universal(random_graph(20, 0.5, 0), 6)
    with pytest.raises(InputError):
        is_l_universal(random_graph(20, 0.5, 0), 3, mode="sampled")
    with pytest.raises(InputError):
        is_l_universal(random_graph(20, 0.5, 0), 3, mode="guess")
    with pytest.raises(InputError):
        is_l_universal(random_graph(20, 0.5, 0), 3.0)
    with pytest.raises(InputError):
        is_l_universal(random_graph(20, 0.5, 0), True)


def _is_induced_path(adj, path):
    return all(adj[path[i], path[j]] == (j == i + 1)
               for i, j in itertools.combinations(range(5), 2))


def test_induced_path5():
    path = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert find_induced_path5(path) == (0, 1, 2, 3, 4)
    assert find_induced_path5(tyomkyn_graph(2)) is None
    assert find_induced_path5(tyomkyn_graph(3)) is None
    for seed in range(20):
        h = nx.gnp_random_graph(9, 0.35, seed=seed)
        g = graph_from_edges(9, list(h.edges()))
        adj = g.to_dense()
        found = find_induced_path5(g)
        brute = any(_is_induced_path(adj, p)
                    for p in itertools.permutations(range(9), 5))
        assert (found is not None) == brute
        if found is not None:
            assert _is_induced_path(adj, found)
            assert found[0] < found[4]


def test_no_induced_path5_in_cliques():
    spec = CliqueSpec((0.4, 0.35, 0.25), 0.0)
    union = clique_union(spec, 20)
    assert find_induced_path5(union) is None
    multipartite = complement(union)
    assert multipartite.m == 190 - union.m
    assert find_induced_path5(multipartite) is None
    with_isolated = clique_union(CliqueSpec((0.3, 0.3, 0.2)), 30)
    assert find_induced_path5(with_isolated) is None
    assert find_induced_path5(complement(with_isolated)) is None


def _brute_transitive(t):
    for k in range(t.n, 0, -1):
        for vs in itertools.combinations(range(t.n), k):
            scores = sorted(induce(t, vs).out_degrees.tolist())
            if scores == list(range(k)):
                return k
    return 0


def test_max_transitive():
    assert max_transitive(transitive_tournament(12)) == 12
    assert max_transitive(circular_tournament(7)) == 4
    for seed in range(6):
        t = random_tournament(8, seed)
        tr = max_transitive(t)
        assert tr == _brute_transitive(t)
        assert tr >= transitive_lower_bound(8)
    assert transitive_lower_bound(8) == 4
    with pytest.raises(WorkCapExceeded):
        max_transitive(random_tournament(25, 0))


def test_fox_sample():
    g = random_graph(100, 0.5, 0)
    s = fox_sample(g, 8, 1)
    assert s.m == sample_size(8) == 4
    assert len(s.vertices) == 4
    assert s.total == 0
    assert fox_sample(g, 8, 1) == s
    s = fox_sample(g, 16, 2)
    assert s.m == 16
    assert list(s.vertices) == sorted(set(s.vertices))
    with pytest.raises(InputError):
        fox_sample(random_graph(10, 0.5, 0), 16, 0)
    with pytest.raises(ValueError):
        fox_sample(g, 3, 0)


def test_fox_trials():
    g = random_graph(30, 0.5, 0)
    res = fox_trials(g, 4, 5, 0)
    assert res.trials == 5
    assert res.mean == 0.0
    assert res.bound_exact
    density = (count_k_cliques(g, 4)
               + count_k_cliques(complement(g), 4)) / comb(30, 4)
    assert res.bound == pytest.approx(2**4 * 2 * density)
    with config_context(work_cap=10**4):
        res = fox_trials(random_graph(40, 0.5, 0), 16, 3, 0)
        again = fox_trials(random_graph(40, 0.5, 0), 16, 3, 0)
    assert not res.bound_exact
    assert res.bound == pytest.approx(16**16 * 2 * 2.0 ** (1 - 120))
    assert res.totals == again.totals == (0, 0, 0)
