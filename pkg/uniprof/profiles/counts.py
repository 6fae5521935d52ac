"""Exact profile counts from degree sums and bitset intersections."""

import logging
import numbers
from math import comb

import numpy as np
from sklearn.utils import check_scalar

from ..base import is_graph, is_tournament
from ..classes import enumerate_classes
from ..exceptions import InputError, VerificationError
from ..utils.bitset import above_masks, unpack_rows
from ..utils.parallel import map_ranges, sum_ranges
from ..utils.validation import check_order, check_work, check_memory
from ._types import Profile3, TournamentProfile4, ArcCycleCounts
from .exhaustive import profile_exhaustive

logger = logging.getLogger(__name__)

_BLOCK = 64


def _binom_sum(values, k):
    """Exact sum of C(v, k) over an int64 array."""
    v = np.asarray(values, dtype=np.int64)
    if k == 2:
        return int((v * (v - 1) // 2).sum())
    if k == 3:
        return int((v * (v - 1) * (v - 2) // 6).sum())
    return sum(comb(int(x), k) for x in v)


def _check_graph(g):
    if not is_graph(g):
        raise InputError("expected a Graph")


def _check_tournament(t):
    if not is_tournament(t):
        raise InputError("expected a Tournament")


def triangle_count(g):
    """Number of triangles of ``g``.

    Every triangle ``u < v < w`` is counted once, from the edge ``uv``, as
    a common neighbour of ``u`` and ``v`` above ``v``.
    """
    _check_graph(g)
    n = g.n
    forward = g.rows & above_masks(n)

    def count(start, stop):
        total = 0
        for a in range(start, stop, _BLOCK):
            b = min(stop, a + _BLOCK)
            dense = unpack_rows(forward[a:b], n)
            for u in range(a, b):
                vs = np.flatnonzero(dense[u - a])
                if vs.size:
                    total += int(np.bitwise_count(forward[vs] & forward[u])
                                 .sum(dtype=np.int64))
        return total

    return sum_ranges(count, n)


def profile3_graph(g):
    """Exact induced 3-vertex profile of a graph.

    Parameters
    ----------
    g : Graph
        Graph with at least 3 vertices.

    Returns
    -------
    profile : Profile3
    """
    _check_graph(g)
    check_order(g, 3)
    n, m = g.n, g.m
    N3 = triangle_count(g)
    N2 = _binom_sum(g.degrees, 2) - 3 * N3
    N1 = m * (n - 2) - 2 * N2 - 3 * N3
    N0 = comb(n, 3) - N1 - N2 - N3
    logger.info("3-profile of n=%d: %s", n, (N0, N1, N2, N3))
    return Profile3(n, (N0, N1, N2, N3))


def cyclic_triangle_count(t):
    """Number of cyclic triangles, C(n,3) - sum C(d+, 2)."""
    _check_tournament(t)
    check_order(t, 3)
    return comb(t.n, 3) - _binom_sum(t.out_degrees, 2)


def _arc_cycles(t, start, stop):
    """(tails, heads, s) for the arcs leaving vertices start..stop-1."""
    n = t.n
    out, in_rows = t.out, t.in_rows
    tails, heads, s = [], [], []
    for a in range(start, stop, _BLOCK):
        b = min(stop, a + _BLOCK)
        dense = unpack_rows(out[a:b], n)
        for u in range(a, b):
            vs = np.flatnonzero(dense[u - a])
            tails.append(np.full(vs.size, u, dtype=np.int32))
            heads.append(vs.astype(np.int32))
            s.append(np.bitwise_count(out[vs] & in_rows[u])
                     .sum(axis=1, dtype=np.int64))
    if not tails:
        empty = np.zeros(0, dtype=np.int32)
        return empty, empty, np.zeros(0, dtype=np.int64)
    return np.concatenate(tails), np.concatenate(heads), np.concatenate(s)


def arc_cycle_counts(t):
    """Number of cyclic triangles through every arc.

    For the arc ``u -> v`` this is ``|N+(v) & N-(u)|``.

    Returns
    -------
    counts : ArcCycleCounts
    """
    _check_tournament(t)
    check_order(t, 3)
    n_arcs = comb(t.n, 2)
    check_memory(n_arcs * 16, f"arc table of {t.n} vertices")
    parts = map_ranges(lambda a, b: _arc_cycles(t, a, b), t.n)
    tails, heads, s = (np.concatenate(x) for x in zip(*parts))
    counts = ArcCycleCounts(t.n, tails, heads, s)
    cyc3 = cyclic_triangle_count(t)
    if counts.total != 3 * cyc3:
        raise VerificationError(f"sum of s_e = {counts.total} != 3*cyc3 = "
                                f"{3 * cyc3}")
    return counts


def _arc_sums(t):
    """(sum s_e, sum C(s_e, 2)) without keeping the arc table."""
    def sums(start, stop):
        s = _arc_cycles(t, start, stop)[2]
        return int(s.sum()), int((s * (s - 1) // 2).sum())

    parts = map_ranges(sums, t.n)
    return sum(p[0] for p in parts), sum(p[1] for p in parts)


def profile4_tournament(t):
    """Exact induced 4-vertex profile of a tournament.

    With ``A = sum C(d+, 3)``, ``B = sum C(d-, 3)`` and
    ``C4 = sum_e C(s_e, 2)``: ``T4 = A + B + C4 - C(n, 4)``,
    ``W4 = A - T4`` and ``L4 = B - T4``.

    Parameters
    ----------
    t : Tournament
        Tournament with at least 4 vertices.

    Returns
    -------
    profile : TournamentProfile4
    """
    _check_tournament(t)
    check_order(t, 4)
    n = t.n
    A = _binom_sum(t.out_degrees, 3)
    B = _binom_sum(t.in_degrees, 3)
    s_total, C4 = _arc_sums(t)
    cyc3 = cyclic_triangle_count(t)
    if s_total != 3 * cyc3:
        raise VerificationError(f"sum of s_e = {s_total} != 3*cyc3 = "
                                f"{3 * cyc3}")
    T4 = A + B + C4 - comb(n, 4)
    W4 = A - T4
    L4 = B - T4
    logger.info("4-profile of n=%d: %s, cyc3=%d", n, (T4, C4, W4, L4), cyc3)
    return TournamentProfile4(n, (T4, C4, W4, L4), (comb(n, 3) - cyc3, cyc3))


def clique_work(g, k):
    """Predicted search nodes of :func:`count_k_cliques`."""
    if k <= 2:
        return g.n
    forward_degrees = np.bitwise_count(g.rows & above_masks(g.n)).sum(axis=1)
    return sum(comb(int(d), k - 2) for d in forward_degrees)


def _count_in(rows, cands, depth):
    """Cliques of size ``depth`` inside the bitset ``cands``."""
    if depth == 1:
        return cands.bit_count()
    total = 0
    while cands.bit_count() >= depth:
        low = cands & -cands
        cands ^= low
        total += _count_in(rows, cands & rows[low.bit_length() - 1],
                           depth - 1)
    return total


def count_k_cliques(g, k):
    """Exact number of k-cliques of ``g``.

    Candidates are extended in ascending vertex order, so every clique is
    found once.  Anticliques are counted on the complement.

    Parameters
    ----------
    g : Graph

    k : int
        Clique order, 1 <= k <= n.

    Returns
    -------
    count : int
    """
    _check_graph(g)
    k = check_scalar(k, "k", numbers.Integral, min_val=1, max_val=g.n)
    if k == 1:
        return g.n
    if k == 2:
        return g.m
    work = check_work(clique_work(g, k), f"{k}-clique count",
                      hint="reduce k or the graph")
    logger.info("counting %d-cliques on n=%d, estimated work %d", k, g.n,
                work)
    rows = g.int_rows

    def count(start, stop):
        return sum(_count_in(rows, rows[v] >> (v + 1) << (v + 1), k - 1)
                   for v in range(start, stop))

    return sum_ranges(count, g.n)


def class_counts(obj, l):
    """Exact counts of every class of order ``l`` (3 to 5).

    The closed identities are used where available (graphs at ``l = 3``,
    tournaments at ``l = 3, 4``); otherwise all l-subsets are enumerated.

    Returns
    -------
    counts : dict
        ClassId -> int, in :func:`uniprof.classes.enumerate_classes` order.
    """
    classes = enumerate_classes(obj.kind, l)
    if is_graph(obj) and l == 3:
        counts = profile3_graph(obj).counts
        named = dict(zip(("P0", "P1", "P2", "P3"), counts))
    elif is_tournament(obj) and l == 3:
        cyc3 = cyclic_triangle_count(obj)
        named = {"T3": comb(obj.n, 3) - cyc3, "C3": cyc3}
    elif is_tournament(obj) and l == 4:
        counts = profile4_tournament(obj).counts4
        named = dict(zip(("T4", "C4", "W4", "L4"), counts))
    else:
        return profile_exhaustive(obj, l)
    return {c: named[c.name] for c in classes}
