"""Binomial random graphs."""

import logging
import numbers

import numpy as np
from sklearn.utils import check_scalar

from ..base import Graph
from ..utils.bitset import pack_rows, transpose_rows
from ..utils.parallel import map_ranges
from ..utils.random import philox_stream
from ..utils.validation import check_n_vertices, check_seed

logger = logging.getLogger(__name__)


def random_graph(n, p, seed):
    """G(n, p): every pair is an edge independently with probability p.

    Row ``u`` draws one uniform per column from its own stream and keeps
    the columns above ``u``; the pair ``u < v`` is decided by entry ``v``.

    Parameters
    ----------
    n : int

    p : float
        Edge probability in [0, 1].

    seed : int

    Returns
    -------
    g : Graph
    """
    n = check_n_vertices(n)
    p = float(check_scalar(p, "p", numbers.Real, min_val=0.0, max_val=1.0))
    seed = check_seed(seed)
    logger.info("random graph n=%d p=%g seed=%d", n, p, seed)
    cols = np.arange(n)

    def block(start, stop):
        dense = np.empty((stop - start, n), dtype=bool)
        for u in range(start, stop):
            dense[u - start] = (philox_stream(seed, u).random(n) < p) \
                & (cols > u)
        return pack_rows(dense)

    upper = np.vstack(map_ranges(block, n))
    return Graph(n, upper | transpose_rows(upper, n))
