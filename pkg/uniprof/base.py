"""Graphs, tournaments and clique-union specifications.

Objects are immutable after construction; every operation returns a new
object.  Adjacency is stored as packed ``uint64`` rows (see
:mod:`uniprof.utils.bitset`).
"""

import hashlib
import logging
import math
from functools import cached_property

import numpy as np

from .exceptions import InputError
from .utils.bitset import (n_words, pack_rows, unpack_rows, row_popcounts,
                           tail_mask, set_bits, get_bits, clear_diagonal,
                           diagonal_is_clear, transpose_rows, to_int_rows)
from .utils.validation import check_n_vertices, check_vertex_list

__all__ = ["Graph", "Tournament", "CliqueSpec", "graph_from_edges",
           "tournament_from_arcs", "complement", "reverse", "induce",
           "is_graph", "is_tournament"]

logger = logging.getLogger(__name__)


class _PackedObject:
    """Common storage for graphs and tournaments.

    Derived classes check their own invariants in ``_check``.
    """
    kind = None

    def __init__(self, n, rows):
        n = check_n_vertices(n)
        rows = np.array(rows, dtype=np.uint64, copy=True)
        if rows.shape != (n, n_words(n)):
            raise InputError(f"expected rows of shape {(n, n_words(n))}, "
                             f"got {rows.shape}")
        if (rows & ~tail_mask(n)).any():
            raise InputError("bits set beyond the last vertex")
        if not diagonal_is_clear(rows):
            raise InputError("self-loop on the diagonal")
        self._check(n, rows)
        rows.flags.writeable = False
        self._n = n
        self._rows = rows

    def _check(self, n, rows):
        raise NotImplementedError()

    @property
    def n(self):
        return self._n

    @property
    def rows(self):
        """Packed rows, read-only."""
        return self._rows

    @cached_property
    def int_rows(self):
        """Rows as Python integers, for recursive searches."""
        return tuple(to_int_rows(self._rows))

    def to_dense(self):
        """Boolean (n, n) adjacency matrix."""
        return unpack_rows(self._rows, self._n)

    def digest(self):
        """SHA256 of kind, order and packed rows."""
        h = hashlib.sha256()
        h.update(f"{self.kind} {self._n}\n".encode())
        h.update(np.ascontiguousarray(self._rows, dtype="<u8").tobytes())
        return h.hexdigest()

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._n == other._n and np.array_equal(self._rows, other._rows)

    __hash__ = None

    def __len__(self):
        return self._n


class Graph(_PackedObject):
    """Undirected simple graph on vertices 0..n-1.

    Parameters
    ----------
    n : int
        Number of vertices.

    rows : array of uint64, shape (n, n_words(n))
        Packed adjacency; bit u of row v is set iff uv is an edge.  Must be
        symmetric with a clear diagonal.
    """
    kind = "graph"

    def __init__(self, n, rows):
        super().__init__(n, rows)
        degrees = row_popcounts(self._rows)
        degrees.flags.writeable = False
        self._degrees = degrees
        self._m = int(degrees.sum()) // 2

    def _check(self, n, rows):
        if not np.array_equal(rows, transpose_rows(rows, n)):
            raise InputError("adjacency is not symmetric")

    @property
    def degrees(self):
        return self._degrees

    @property
    def m(self):
        """Number of edges."""
        return self._m

    def has_edge(self, u, v):
        return bool(get_bits(self._rows, u, v))

    def neighbors(self, v):
        return np.flatnonzero(unpack_rows(self._rows[v:v + 1], self._n)[0])

    def edges(self):
        """Edges (u, v) with u < v in lexicographic order, shape (m, 2)."""
        u, v = np.nonzero(np.triu(self.to_dense(), k=1))
        return np.column_stack([u, v])

    def __repr__(self):
        return f"Graph(n={self._n}, m={self._m})"


class Tournament(_PackedObject):
    """Tournament on vertices 0..n-1.

    Parameters
    ----------
    n : int
        Number of vertices.

    rows : array of uint64, shape (n, n_words(n))
        Packed out-neighbourhoods; bit u of row v is set iff v -> u.  For
        every pair exactly one orientation must be present.
    """
    kind = "tournament"

    def __init__(self, n, rows):
        super().__init__(n, rows)
        out_degrees = row_popcounts(self._rows)
        out_degrees.flags.writeable = False
        self._out_degrees = out_degrees

    def _check(self, n, rows):
        rows_t = transpose_rows(rows, n)
        if (rows & rows_t).any():
            raise InputError("both orientations of a pair are present")
        full = np.broadcast_to(tail_mask(n), rows.shape).copy()
        clear_diagonal(full)
        if not np.array_equal(rows | rows_t, full):
            raise InputError("some pair has no orientation")

    @property
    def out(self):
        return self._rows

    @property
    def out_degrees(self):
        return self._out_degrees

    @property
    def in_degrees(self):
        return self._n - 1 - self._out_degrees

    @cached_property
    def in_rows(self):
        """Packed in-neighbourhoods (read-only)."""
        rows = ~self._rows & tail_mask(self._n)
        clear_diagonal(rows)
        rows.flags.writeable = False
        return rows

    def beats(self, u, v):
        return bool(get_bits(self._rows, u, v))

    def arcs(self):
        """Arcs (u, v) meaning u -> v, ordered by tail then head."""
        u, v = np.nonzero(self.to_dense())
        return np.column_stack([u, v])

    def __repr__(self):
        return f"Tournament(n={self._n})"


def is_graph(obj):
    return isinstance(obj, Graph)


def is_tournament(obj):
    return isinstance(obj, Tournament)


def _as_pairs(pairs, what):
    try:
        pairs = np.asarray(list(pairs), dtype=np.int64)
    except (TypeError, ValueError):
        raise InputError(f"{what}s must be pairs of integers")
    if pairs.size == 0:
        return np.zeros((0, 2), dtype=np.int64)
    if pairs.ndim != 2 or pairs.shape[1] != 2:
        raise InputError(f"{what}s must be pairs of integers")
    return pairs


def _check_pairs(pairs, n, what):
    bad = np.flatnonzero(((pairs < 0) | (pairs >= n)).any(axis=1))
    if bad.size:
        i = int(bad[0])
        pair = tuple(int(x) for x in pairs[i])
        raise InputError(f"{what} #{i} {pair} has a vertex outside "
                         f"0..{n - 1}", index=i, pair=pair)
    loops = np.flatnonzero(pairs[:, 0] == pairs[:, 1])
    if loops.size:
        i = int(loops[0])
        pair = tuple(int(x) for x in pairs[i])
        raise InputError(f"{what} #{i} {pair} is a self-loop",
                         index=i, pair=pair)


def graph_from_edges(n, edges):
    """Build a graph from undirected edges.

    Duplicates and the orientation of a pair are irrelevant.
    """
    n = check_n_vertices(n)
    pairs = _as_pairs(edges, "edge")
    _check_pairs(pairs, n, "edge")
    rows = np.zeros((n, n_words(n)), dtype=np.uint64)
    set_bits(rows, pairs[:, 0], pairs[:, 1])
    set_bits(rows, pairs[:, 1], pairs[:, 0])
    g = Graph(n, rows)
    logger.debug("graph from %d edges: %r", len(pairs), g)
    return g


def tournament_from_arcs(n, arcs):
    """Build a tournament from arcs (u, v) meaning u -> v.

    Every unordered pair must appear exactly once.
    """
    n = check_n_vertices(n)
    pairs = _as_pairs(arcs, "arc")
    _check_pairs(pairs, n, "arc")
    lo = pairs.min(axis=1)
    hi = pairs.max(axis=1)
    keys = lo * n + hi
    order = np.argsort(keys, kind="stable")
    repeated = np.flatnonzero(keys[order][1:] == keys[order][:-1])
    if repeated.size:
        i = int(order[repeated + 1].min())
        j = int(order[np.searchsorted(keys[order], keys[i])])
        pair = tuple(int(x) for x in pairs[i])
        if tuple(pairs[j]) == tuple(pairs[i]):
            msg = f"arc #{i} {pair} is listed twice"
        else:
            msg = f"arc #{i} {pair}: both orientations are present"
        raise InputError(msg, index=i, pair=pair)
    rows = np.zeros((n, n_words(n)), dtype=np.uint64)
    set_bits(rows, pairs[:, 0], pairs[:, 1])
    if len(pairs) != math.comb(n, 2):
        covered = rows | transpose_rows(rows, n)
        full = np.broadcast_to(tail_mask(n), rows.shape).copy()
        clear_diagonal(full)
        u = int(np.flatnonzero((full & ~covered).any(axis=1))[0])
        missing = unpack_rows((full & ~covered)[u:u + 1], n)[0]
        v = int(np.flatnonzero(missing)[0])
        raise InputError(f"pair {(u, v)} has no arc", pair=(u, v))
    logger.debug("tournament from %d arcs on %d vertices", len(pairs), n)
    return Tournament(n, rows)


def complement(g):
    """Complement graph; the diagonal stays clear."""
    if not is_graph(g):
        raise InputError("complement expects a Graph")
    rows = ~g.rows & tail_mask(g.n)
    clear_diagonal(rows)
    return Graph(g.n, rows)


def reverse(t):
    """Tournament with every arc reversed."""
    if not is_tournament(t):
        raise InputError("reverse expects a Tournament")
    return Tournament(t.n, t.in_rows)


def induce(obj, vs):
    """Induced subgraph or subtournament on ``vs``, in the given order."""
    if not isinstance(obj, (Graph, Tournament)):
        raise InputError("induce expects a Graph or a Tournament")
    vs = check_vertex_list(vs, obj.n)
    if vs.size == 0:
        raise InputError("induce needs at least one vertex")
    dense = unpack_rows(obj.rows[vs], obj.n)[:, vs]
    return type(obj)(len(vs), pack_rows(dense))


class CliqueSpec:
    """Limit description of a disjoint union of cliques.

    Parameters
    ----------
    alphas : sequence of float
        Relative clique sizes.  Zeros are dropped and the rest sorted
        decreasingly, so ``alphas[0] >= ... >= alphas[-1] > 0``.

    beta : float, default=None
        Relative number of isolated vertices; ``1 - sum(alphas)`` when
        omitted.  ``sum(alphas) + beta`` must equal 1 within 1e-12.
    """
    TOL = 1e-12

    def __init__(self, alphas=(), beta=None):
        alphas = np.asarray(alphas, dtype=float).reshape(-1)
        if not np.isfinite(alphas).all() or (alphas < 0).any():
            raise InputError("clique sizes must be finite and non-negative")
        alphas = np.sort(alphas[alphas > 0])[::-1]
        total = math.fsum(alphas)
        if beta is None:
            beta = 1.0 - total
            if beta < -self.TOL:
                raise InputError(f"clique sizes sum to {total!r} > 1")
            beta = max(beta, 0.0)
        else:
            beta = float(beta)
            if not np.isfinite(beta) or beta < 0:
                raise InputError("beta must be finite and non-negative")
            if abs(total + beta - 1.0) > self.TOL:
                raise InputError(f"sum(alphas) + beta = {total + beta!r} "
                                 "differs from 1")
        self._alphas = tuple(float(a) for a in alphas)
        self._beta = beta

    @property
    def alphas(self):
        return self._alphas

    @property
    def beta(self):
        return self._beta

    @property
    def r(self):
        return len(self._alphas)

    def __eq__(self, other):
        if not isinstance(other, CliqueSpec):
            return NotImplemented
        return self._alphas == other._alphas and self._beta == other._beta

    __hash__ = None

    def __repr__(self):
        alphas = ", ".join(f"{a:.6g}" for a in self._alphas)
        return f"CliqueSpec(alphas=({alphas}), beta={self._beta:.6g})"
