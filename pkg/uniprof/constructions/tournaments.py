"""Circular, transitive and random tournaments."""

import logging

import numpy as np

from ..base import Tournament
from ..exceptions import InputError
from ..utils.bitset import (n_words, pack_rows, above_masks, below_masks,
                            transpose_rows)
from ..utils.parallel import map_ranges
from ..utils.random import philox_stream
from ..utils.validation import check_n_vertices, check_seed

logger = logging.getLogger(__name__)


def circular_tournament(n):
    """Vertex v beats v+1, ..., v+(n-1)/2 (mod n).

    Parameters
    ----------
    n : int
        Odd order, at least 3.
    """
    n = check_n_vertices(n, min_val=3)
    if n % 2 == 0:
        raise InputError(f"circular tournaments need odd n, got {n}")
    half = (n - 1) // 2
    cols = np.arange(n)

    def block(start, stop):
        gap = (cols[None, :] - np.arange(start, stop)[:, None]) % n
        return pack_rows((gap >= 1) & (gap <= half))

    return Tournament(n, np.vstack(map_ranges(block, n)))


def transitive_tournament(n):
    """Arc u -> v iff u < v."""
    n = check_n_vertices(n)
    return Tournament(n, above_masks(n))


def random_words(n, seed, start, stop):
    """Uniform random bits for rows start..stop-1, one stream per row."""
    words = np.empty((stop - start, n_words(n)), dtype=np.uint64)
    for v in range(start, stop):
        words[v - start] = philox_stream(seed, v).integers(
            0, 2**64 - 1, size=n_words(n), dtype=np.uint64, endpoint=True)
    return words


def random_tournament(n, seed):
    """Every pair oriented by a fair coin.

    The orientation of the pair ``u < v`` is bit ``v`` of the stream of row
    ``u``, so the result depends only on ``(n, seed)``.
    """
    n = check_n_vertices(n)
    seed = check_seed(seed)
    logger.info("random tournament n=%d seed=%d", n, seed)
    upper = np.vstack(map_ranges(
        lambda a, b: random_words(n, seed, a, b) & above_masks(n, a, b), n))
    out = upper | (~transpose_rows(upper, n) & below_masks(n))
    return Tournament(n, out)
