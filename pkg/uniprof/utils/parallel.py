"""Deterministic partitioned reductions on top of joblib."""

import logging

from joblib import Parallel, delayed

from .._config import get_config

logger = logging.getLogger(__name__)


def partition(n, n_parts):
    """Split range(n) into at most n_parts contiguous (start, stop) pairs.

    The partition depends only on its arguments, never on the number of
    workers.
    """
    n_parts = max(1, min(n, n_parts))
    bounds = [(i * n) // n_parts for i in range(n_parts + 1)]
    return [(a, b) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]


def map_ranges(func, n, n_parts=64, prefer="threads"):
    """Apply ``func(start, stop)`` over a fixed partition of range(n).

    Results are returned in partition order.
    """
    n_jobs = get_config()["n_jobs"]
    parts = partition(n, n_parts)
    logger.debug("map_ranges: %d parts, n_jobs=%d", len(parts), n_jobs)
    if n_jobs == 1:
        return [func(a, b) for a, b in parts]
    return Parallel(n_jobs=n_jobs, prefer=prefer)(
        delayed(func)(a, b) for a, b in parts)


def sum_ranges(func, n, n_parts=64):
    """Exact integer sum of ``func(start, stop)`` over a fixed partition."""
    return sum(int(x) for x in map_ranges(func, n, n_parts))
