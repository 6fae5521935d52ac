import itertools
from math import comb

import networkx as nx
import numpy as np
import pytest

from uniprof import (graph_from_edges, tournament_from_arcs, complement,
                     reverse, induce, config_context)
from uniprof.constructions import (random_graph, random_tournament,
                                   circular_tournament, transitive_tournament,
                                   tyomkyn_graph)
from uniprof.exceptions import VerificationError, WorkCapExceeded
from uniprof.profiles import (Profile3, profile3_graph, profile4_tournament,
                              triangle_count, cyclic_triangle_count,
                              arc_cycle_counts, count_k_cliques,
                              class_counts, profile_exhaustive,
                              profile_montecarlo)
from uniprof.profiles.sampling import sample_subsets
from uniprof.utils.random import philox_stream


def _by_name(counts):
    return {c.name: x for c, x in counts.items()}


def test_petersen():
    g = graph_from_edges(10, list(nx.petersen_graph().edges()))
    p = profile3_graph(g)
    assert p.counts == (30, 60, 30, 0)
    assert p.reversed().counts == (0, 30, 60, 30)
    assert sum(p.densities) == pytest.approx(1.0)


def test_triangles_networkx():
    for seed, n in [(0, 70), (1, 130), (2, 20)]:
        g = random_graph(n, 0.4, seed)
        h = nx.Graph(g.edges().tolist())
        h.add_nodes_from(range(n))
        assert triangle_count(g) == sum(nx.triangles(h).values()) // 3


def test_profiles_match_enumeration():
    for seed in range(60):
        n = 5 + seed % 36
        g = random_graph(n, 0.2 + 0.01 * seed, seed)
        exact = profile3_graph(g).counts
        assert tuple(profile_exhaustive(g, 3).values()) == exact

        t = random_tournament(n, seed)
        p = profile4_tournament(t)
        enum4 = _by_name(profile_exhaustive(t, 4))
        assert (enum4["T4"], enum4["C4"], enum4["W4"], enum4["L4"]) == \
            p.counts4
        enum3 = _by_name(profile_exhaustive(t, 3))
        assert (enum3["T3"], enum3["C3"]) == p.counts3


def test_tournament_identities():
    for seed in range(10):
        t = random_tournament(40 + seed, seed)
        n = t.n
        p = profile4_tournament(t)
        T4, C4, W4, L4 = p.counts4
        assert T4 + W4 == sum(comb(int(d), 3) for d in t.out_degrees)
        assert T4 + L4 == sum(comb(int(d), 3) for d in t.in_degrees)
        assert p.cyc3 * (n - 3) == 2 * C4 + W4 + L4
        arcs = arc_cycle_counts(t)
        assert len(arcs) == comb(n, 2)
        assert arcs.total == 3 * p.cyc3
        assert arcs.pair_sum() == C4
        assert cyclic_triangle_count(t) == p.cyc3


def test_circular_profile():
    t = circular_tournament(13)
    p = profile4_tournament(t)
    assert p.counts4[2] == 0 and p.counts4[3] == 0
    assert tuple(profile_exhaustive(t, 4)[c] for c in class_counts(t, 4)) \
        == tuple(class_counts(t, 4).values())
    for n in [101, 501]:
        p = profile4_tournament(circular_tournament(n))
        assert p.counts4[2] == 0 and p.counts4[3] == 0
        assert abs(p.densities4[0] - 0.5) <= 3 / n
        assert p.cyc3 == (n**3 - n) // 24


def test_transitive_profile():
    p = profile4_tournament(transitive_tournament(50))
    assert p.counts4 == (comb(50, 4), 0, 0, 0)
    assert p.cyc3 == 0


def test_k_cliques():
    g = random_graph(30, 0.5, 3)
    h = nx.Graph(g.edges().tolist())
    cliques = list(nx.enumerate_all_cliques(h))
    for k in [3, 4, 5]:
        assert count_k_cliques(g, k) == sum(1 for c in cliques if len(c) == k)
    assert count_k_cliques(g, 2) == g.m
    assert count_k_cliques(g, 1) == 30


def test_class_counts_order5():
    g = random_graph(12, 0.5, 4)
    counts = class_counts(g, 5)
    assert sum(counts.values()) == comb(12, 5)
    assert len(counts) == 34


def test_work_cap():
    g = random_graph(20, 0.5, 0)
    with config_context(work_cap=100):
        with pytest.raises(WorkCapExceeded):
            profile_exhaustive(g, 4)


def test_bad_profile():
    assert Profile3(5, (1, 2, 3, 4)).total == 10
    with pytest.raises(VerificationError):
        Profile3(5, (1, 2, 3, 5))
    with pytest.raises(VerificationError):
        Profile3(5, (-1, 2, 3, 6))
    with pytest.raises(VerificationError):
        Profile3(5, (4, 3, 3))


def test_montecarlo():
    g = random_graph(200, 0.5, 1)
    exact = profile3_graph(g).densities
    est = profile_montecarlo(g, 3, 20000, 5)
    assert est.samples == 20000
    assert int(est.counts.sum()) == 20000
    assert np.abs(est.densities - exact).max() < 0.02
    assert (est.half_widths > 0).all()
    with config_context(n_jobs=2):
        again = profile_montecarlo(g, 3, 20000, 5)
    assert np.array_equal(est.counts, again.counts)
    other = profile_montecarlo(g, 3, 20000, 6)
    assert not np.array_equal(est.counts, other.counts)


def test_montecarlo_large_orders():
    g = random_graph(40, 0.5, 1)
    est = profile_montecarlo(g, 6, 3000, 0)
    assert int(est.counts.sum()) == 3000
    assert all(c.l == 6 and c.name.startswith("G6:") for c in est.classes)
    assert len(est.classes) <= 156
    t = random_tournament(30, 0)
    est = profile_montecarlo(t, 4, 5000, 0)
    exact = profile4_tournament(t).densities4[0]
    assert est.density("T4") == pytest.approx(exact, abs=0.03)
    assert est.density("nothing") == 0.0


def _cyc3_by_score(n):
    """Cyclic triangle counts of all 2**C(n,2) labelled tournaments."""
    pairs = list(itertools.combinations(range(n), 2))
    codes = np.arange(2 ** len(pairs), dtype=np.int64)
    out = np.zeros((n, len(codes)), dtype=np.int64)
    for k, (a, b) in enumerate(pairs):
        bit = (codes >> k) & 1
        out[a] += bit
        out[b] += 1 - bit
    return pairs, comb(n, 3) - (out * (out - 1) // 2).sum(axis=0)


def test_cyclic_triangles_exhaustive():
    for n in range(3, 7):
        _, cyc3 = _cyc3_by_score(n)
        assert cyc3.min() == 0
        assert cyc3.max() == (n**3 - n) // 24
    for n in [4, 5]:
        pairs, cyc3 = _cyc3_by_score(n)
        for code in range(2 ** len(pairs)):
            arcs = [(a, b) if (code >> k) & 1 else (b, a)
                    for k, (a, b) in enumerate(pairs)]
            t = tournament_from_arcs(n, arcs)
            assert cyclic_triangle_count(t) == cyc3[code]


def test_reverse_swaps_w4_l4():
    for n, seed in [(8, 0), (8, 1), (8, 2), (30, 3)]:
        t = random_tournament(n, seed)
        T4, C4, W4, L4 = profile4_tournament(t).counts4
        p = profile4_tournament(reverse(t))
        assert p.counts4 == (T4, C4, L4, W4)
        assert p.cyc3 == cyclic_triangle_count(t)


def test_complement_profile():
    for seed in range(5):
        g = random_graph(25 + seed, 0.3, seed)
        assert profile3_graph(complement(g)).counts == \
            profile3_graph(g).reversed().counts
    g = tyomkyn_graph(2)
    assert profile3_graph(complement(g)).counts == profile3_graph(g).counts


def test_induce_composes():
    outer = [29, 3, 17, 8, 0, 22, 11, 5, 14, 26, 1, 9]
    inner = [7, 0, 11, 3, 5, 2]
    for obj in [random_graph(30, 0.5, 2), random_tournament(30, 2)]:
        assert induce(induce(obj, outer), inner) == \
            induce(obj, [outer[i] for i in inner])
        sub = induce(obj, outer)
        assert sub.n == 12
        dense = obj.to_dense()
        assert np.array_equal(sub.to_dense(), dense[np.ix_(outer, outer)])


def test_montecarlo_pentagon():
    est = profile_montecarlo(tyomkyn_graph(1), 3, 100_000, 11)
    exact = np.array([0.0, 0.5, 0.5, 0.0])
    assert est.counts[0] == est.counts[3] == 0
    assert (np.abs(est.densities - exact) <= 5 * est.half_widths).all()


def test_sample_subsets_dense():
    rows = sample_subsets(8, 8, 50, philox_stream(0, 0))
    assert (rows == np.arange(8)).all()
    rows = sample_subsets(6, 5, 3000, philox_stream(1, 0))
    assert rows.shape == (3000, 5)
    assert (np.diff(rows, axis=1) > 0).all()
    assert rows.min() >= 0 and rows.max() <= 5
    _, seen = np.unique(rows, axis=0, return_counts=True)
    assert len(seen) == 6
    assert seen.min() > 400
    again = sample_subsets(6, 5, 3000, philox_stream(1, 0))
    assert np.array_equal(rows, again)


def test_montecarlo_whole_object():
    t = random_tournament(8, 0)
    est = profile_montecarlo(t, 8, 2000, 0)
    assert len(est.classes) == 1
    assert est.counts.tolist() == [2000]
    g = tyomkyn_graph(1)
    est = profile_montecarlo(g, 5, 500, 3)
    assert (est.counts > 0).sum() == 1
    assert int(est.counts.sum()) == 500
