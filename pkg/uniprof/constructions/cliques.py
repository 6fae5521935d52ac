"""Disjoint unions of cliques."""

import logging

import numpy as np

from ..base import Graph, CliqueSpec
from ..exceptions import InputError
from ..extremal.theta import solve_cubic_theta
from ..utils.bitset import n_words, range_mask, clear_diagonal
from ..utils.validation import check_n_vertices

logger = logging.getLogger(__name__)


def apportion(weights, n):
    """Largest-remainder rounding of ``weights * n`` to integers summing to n.

    Leftover units go to the largest fractional parts, ties to the lower
    index.
    """
    quotas = np.asarray(weights, dtype=float) * n
    sizes = np.floor(quotas).astype(np.int64)
    remainders = quotas - sizes
    left = n - int(sizes.sum())
    order = np.lexsort((np.arange(len(quotas)), -remainders))
    sizes[order[:left]] += 1
    return sizes


def clique_sizes(spec, n):
    """Clique sizes and isolated vertex count of ``clique_union(spec, n)``."""
    if not isinstance(spec, CliqueSpec):
        raise InputError("expected a CliqueSpec")
    n = check_n_vertices(n)
    if n < spec.r:
        raise InputError(f"{spec.r} cliques need at least {spec.r} vertices, "
                         f"got n={n}")
    sizes = apportion(spec.alphas + (spec.beta,), n)
    return tuple(int(s) for s in sizes[:-1]), int(sizes[-1])


def clique_union(spec, n):
    """Graph on n vertices with cliques of sizes ~ alpha_i * n.

    Cliques occupy consecutive index ranges in the order of
    ``spec.alphas``; the isolated vertices come last.  A clique rounded to
    size 0 vanishes.

    Parameters
    ----------
    spec : CliqueSpec

    n : int

    Returns
    -------
    g : Graph
    """
    sizes, isolated = clique_sizes(spec, n)
    logger.info("clique union on %d vertices: sizes %s, %d isolated", n,
                sizes, isolated)
    rows = np.zeros((n, n_words(n)), dtype=np.uint64)
    start = 0
    for size in sizes:
        rows[start:start + size] = range_mask(n, start, start + size)
        start += size
    clear_diagonal(rows)
    return Graph(n, rows)


def extremal_rho_graph(n):
    """Clique union (theta, theta, 1 - 2*theta); p0 and p3 tend to rho."""
    n = check_n_vertices(n, min_val=3)
    theta = solve_cubic_theta().theta
    return clique_union(CliqueSpec((theta, theta, 1 - 2 * theta), 0.0), n)
