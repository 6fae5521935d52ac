"""Isomorphism classes of small graphs and tournaments.

A labelled object on ``l`` vertices is encoded by its upper triangle: the
pairs ``(p, q)``, ``p < q``, are taken in lexicographic order and pair ``k``
contributes bit ``P - 1 - k`` of the code, ``P = l(l-1)/2``.  For graphs the
bit says "pq is an edge", for tournaments "p -> q".  The canonical form of
a class is the smallest code reachable by relabelling, written as a bit
string of length ``P`` with pair 0 first.

Orders 3..5 use the minimum over all ``l!`` permutations and come with a
complete, indexed class list.  Orders 6..8 (sampling only) minimise over
the permutations that respect a colour refinement of the vertices, which is
an exact isomorphism invariant but has no enumerated class list.
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .exceptions import InputError
from .utils.bitset import get_bits

logger = logging.getLogger(__name__)

__all__ = ["ClassId", "canonical_class", "enumerate_classes", "class_of_code",
           "canonical_codes", "classify_codes", "labelled_codes",
           "KNOWN_CLASS_COUNTS", "KINDS"]

KINDS = ("graph", "tournament")

# number of isomorphism classes per (kind, l)
KNOWN_CLASS_COUNTS = {
    ("graph", 3): 4, ("graph", 4): 11, ("graph", 5): 34,
    ("graph", 6): 156, ("graph", 7): 1044, ("graph", 8): 12346,
    ("tournament", 3): 2, ("tournament", 4): 4, ("tournament", 5): 12,
    ("tournament", 6): 56, ("tournament", 7): 456, ("tournament", 8): 6880,
}

MAX_ENUMERATED = 5
MAX_SAMPLED = 8

# sorted degree sequence -> name, 4-vertex graphs
_GRAPH4_NAMES = {
    (0, 0, 0, 0): "4K1", (0, 0, 1, 1): "K2+2K1", (1, 1, 1, 1): "2K2",
    (0, 1, 1, 2): "P3+K1", (0, 2, 2, 2): "K3+K1", (1, 1, 1, 3): "claw",
    (1, 1, 2, 2): "P4", (2, 2, 2, 2): "C4", (1, 2, 2, 3): "paw",
    (2, 2, 3, 3): "diamond", (3, 3, 3, 3): "K4",
}

# sorted score sequence -> name, 4-vertex tournaments; W4 has a vertex
# beating a cyclic triangle, L4 a cyclic triangle beating a vertex
_TOURNAMENT4_NAMES = {
    (0, 1, 2, 3): "T4", (1, 1, 2, 2): "C4",
    (1, 1, 1, 3): "W4", (0, 2, 2, 2): "L4",
}


@dataclass(frozen=True, order=True)
class ClassId:
    """Isomorphism class of an l-vertex graph or tournament.

    ``index`` is the position in :func:`enumerate_classes` for ``l <= 5``
    and ``None`` for the sampled orders.
    """
    kind: str
    l: int
    canon: str
    index: int = field(default=None, compare=False)
    name: str = field(default=None, compare=False)

    def __str__(self):
        return self.name


def _check_kind(kind):
    if kind not in KINDS:
        raise InputError(f"kind must be one of {KINDS}, got {kind!r}")
    return kind


def _check_l(l, max_l=MAX_ENUMERATED):
    if not isinstance(l, (int, np.integer)) or not 3 <= l <= max_l:
        raise InputError(f"order l must be in 3..{max_l}, got {l!r}")
    return int(l)


@lru_cache(maxsize=None)
def _pairs(l):
    i, j = np.triu_indices(l, k=1)
    P = len(i)
    weights = np.left_shift(np.int64(1), np.arange(P - 1, -1, -1,
                                                   dtype=np.int64))
    index = np.zeros((l, l), dtype=np.intp)
    index[i, j] = np.arange(P)
    index[j, i] = np.arange(P)
    return i, j, weights, index


def labelled_codes(rows, subsets):
    """Codes of the objects induced on each row of ``subsets``.

    ``rows`` are packed adjacency (or out-neighbourhood) rows and
    ``subsets`` an integer array of shape (k, l); vertex order inside a
    row is the labelling.
    """
    subsets = np.asarray(subsets, dtype=np.intp)
    i, j, weights, _ = _pairs(subsets.shape[1])
    bits = get_bits(rows, subsets[:, i], subsets[:, j])
    return bits.astype(np.int64) @ weights


def _code_bits(codes, l):
    _, _, weights, _ = _pairs(l)
    codes = np.asarray(codes, dtype=np.int64)
    return (codes[..., None] & weights) != 0


def _permuted_codes(kind, l, bits, perms):
    """Codes after relabelling; new vertex ``x`` is old vertex ``perm[x]``.

    ``bits`` has shape (..., P), ``perms`` shape (K, l); the result has
    shape (..., K).
    """
    i, j, weights, index = _pairs(l)
    a = perms[:, i]
    b = perms[:, j]
    new = bits[..., index[a, b]]
    if kind == "tournament":
        new = new ^ (a > b)
    return new.astype(np.int64) @ weights


def _decode(kind, l, code):
    i, j, _, _ = _pairs(l)
    bits = _code_bits(code, l)
    dense = np.zeros((l, l), dtype=bool)
    dense[i, j] = bits
    dense[j, i] = bits if kind == "graph" else ~bits
    return dense


@lru_cache(maxsize=None)
def _class_table(kind, l):
    """Canonical code of every labelled code, and the sorted class list."""
    P = l * (l - 1) // 2
    bits = _code_bits(np.arange(2**P, dtype=np.int64), l)
    canon = np.full(2**P, np.iinfo(np.int64).max, dtype=np.int64)
    # one permutation at a time keeps the temporaries at 2**P * P
    for perm in itertools.permutations(range(l)):
        perm = np.array([perm], dtype=np.intp)
        np.minimum(canon, _permuted_codes(kind, l, bits, perm)[:, 0],
                   out=canon)
    classes, lookup = np.unique(canon, return_inverse=True)
    lookup = lookup.astype(np.int32)
    ids = tuple(_make_class(kind, l, int(c), k) for k, c in enumerate(classes))
    logger.debug("%s classes of order %d: %d", kind, l, len(ids))
    return canon, lookup, ids


def _class_name(kind, l, code, index):
    dense = _decode(kind, l, code)
    degrees = tuple(sorted(int(d) for d in dense.sum(axis=1)))
    if kind == "graph":
        if l == 3:
            return f"P{sum(degrees) // 2}"
        if l == 4:
            return _GRAPH4_NAMES[degrees]
        prefix = "G"
    else:
        if l == 3:
            return "T3" if degrees == (0, 1, 2) else "C3"
        if l == 4:
            return _TOURNAMENT4_NAMES[degrees]
        prefix = "T"
    if index is None:
        return f"{prefix}{l}:{code:x}"
    return f"{prefix}{l}#{index}"


def _make_class(kind, l, code, index):
    P = l * (l - 1) // 2
    return ClassId(kind, l, format(code, f"0{P}b"), index,
                   _class_name(kind, l, code, index))


def enumerate_classes(kind, l):
    """All isomorphism classes of order ``l`` sorted by canonical form.

    Parameters
    ----------
    kind : {"graph", "tournament"}

    l : int
        Order, 3 to 5.

    Returns
    -------
    classes : tuple of ClassId
        ``classes[k].index == k``.
    """
    return _class_table(_check_kind(kind), _check_l(l))[2]


def _refine(dense, kind):
    """Stable colour refinement; colours are ranks of invariant signatures."""
    colors = dense.sum(axis=1)
    n_colors = len(set(colors.tolist()))
    while True:
        sig = []
        for v in range(len(dense)):
            s = (int(colors[v]), tuple(sorted(colors[dense[v]].tolist())))
            if kind == "tournament":
                s += (tuple(sorted(colors[dense[:, v]].tolist())),)
            sig.append(s)
        ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
        new = np.array([ranks[s] for s in sig])
        if len(ranks) == n_colors:
            return new
        colors, n_colors = new, len(ranks)


def _refined_canon(kind, l, code):
    dense = _decode(kind, l, code)
    colors = _refine(dense, kind)
    order = np.argsort(colors, kind="stable")
    cells = [order[colors[order] == c] for c in np.unique(colors)]
    perms = np.array([np.concatenate(p) for p in itertools.product(
        *(itertools.permutations(cell) for cell in cells))], dtype=np.intp)
    return int(_permuted_codes(kind, l, _code_bits(code, l), perms).min())


def canonical_codes(kind, l, codes, cache=None):
    """Canonical codes of an array of labelled codes (orders 3..8)."""
    _check_kind(kind)
    l = _check_l(l, MAX_SAMPLED)
    codes = np.asarray(codes, dtype=np.int64)
    if l <= MAX_ENUMERATED:
        return _class_table(kind, l)[0][codes]
    if cache is None:
        cache = {}
    distinct, inverse = np.unique(codes, return_inverse=True)
    canon = np.empty(len(distinct), dtype=np.int64)
    for k, code in enumerate(distinct.tolist()):
        if code not in cache:
            cache[code] = _refined_canon(kind, l, code)
        canon[k] = cache[code]
    return canon[inverse].reshape(codes.shape)


def classify_codes(kind, l, codes):
    """Class indices (into :func:`enumerate_classes`) of labelled codes."""
    _check_kind(kind)
    l = _check_l(l)
    return _class_table(kind, l)[1][np.asarray(codes, dtype=np.int64)]


def class_of_code(kind, l, canon_code):
    """ClassId for a canonical code."""
    _check_kind(kind)
    l = _check_l(l, MAX_SAMPLED)
    if l <= MAX_ENUMERATED:
        canon, lookup, ids = _class_table(kind, l)
        return ids[lookup[canon_code]]
    return _make_class(kind, l, int(canon_code), None)


def canonical_class(obj):
    """Isomorphism class of a graph or tournament on 3 to 8 vertices."""
    l = _check_l(obj.n, MAX_SAMPLED)
    subset = np.arange(l)[None, :]
    code = labelled_codes(obj.rows, subset)
    canon = canonical_codes(obj.kind, l, code)[0]
    return class_of_code(obj.kind, l, int(canon))
