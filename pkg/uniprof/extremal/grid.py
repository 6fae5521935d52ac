"""Grid search for min max(p0, p3) over clique unions with p0 ~ p3."""

import logging
import numbers

import numpy as np
from sklearn.utils import check_scalar

from ..base import CliqueSpec
from ..utils.parallel import map_ranges
from .densities import power_sum_densities

logger = logging.getLogger(__name__)

REFINE_FACTOR = 10
REFINE_RADIUS = 10


def _tails(limit, budget, count):
    """Non-increasing tuples of ``count`` integers in 1..limit with sum at
    most ``budget``, as (M, count) arrays."""
    if count == 0:
        yield np.zeros((1, 0), dtype=np.int64)
        return
    top = min(limit, budget)
    if top < count:
        return
    if count == 1:
        yield np.arange(1, top + 1, dtype=np.int64)[:, None]
        return
    if count == 2:
        a, b = np.meshgrid(np.arange(1, top + 1), np.arange(1, top + 1),
                           indexing="ij")
        ok = (b <= a) & (a + b <= budget)
        yield np.column_stack([a[ok], b[ok]]).astype(np.int64)
        return
    for k in range(1, top + 1):
        for rest in _tails(k, budget - k, count - 1):
            yield np.column_stack([np.full(len(rest), k), rest])


def _evaluate(points, scale, band):
    """Best (value, point) among integer points with |p0 - p3| <= band."""
    a = points / scale
    P1 = a.sum(axis=1)
    p0, p3 = power_sum_densities(P1, (a**2).sum(axis=1), (a**3).sum(axis=1),
                                 1 - P1)
    value = np.maximum(p0, p3)
    value[np.abs(p0 - p3) > band] = np.inf
    if not len(value) or not np.isfinite(value).any():
        return None
    # lexicographically least point among the minima
    best = np.flatnonzero(value == value.min())
    order = np.lexsort(points[best].T[::-1])
    k = best[order[0]]
    return float(value[k]), tuple(int(x) for x in points[k])


def _better(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b, key=lambda v: (v[0], v[1]))


def _refine(best, scale, band):
    """One pass at ``scale * REFINE_FACTOR`` around the incumbent."""
    centre = np.array(best[1], dtype=np.int64) * REFINE_FACTOR
    r = len(centre)
    offsets = np.arange(-REFINE_RADIUS, REFINE_RADIUS + 1)
    grid = np.stack(np.meshgrid(*[offsets] * r, indexing="ij"), axis=-1)
    points = centre + grid.reshape(-1, r)
    fine = scale * REFINE_FACTOR
    points = -np.sort(-points, axis=1)
    ok = (points[:, -1] >= 1) & (points.sum(axis=1) <= fine)
    found = _evaluate(points[ok], fine, band)
    return found, fine


def grid_search_min(r_max, step, band):
    """Minimise max(p0, p3) over clique sizes on a grid, |p0 - p3| <= band.

    Clique sizes are multiples of ``1/K``, ``K = round(1/step)``, with
    ``alpha_1 >= ... >= alpha_r >= 1/K`` and sum at most 1, for every
    ``r <= r_max``.  The incumbent is then refined once on the grid of
    step ``step/10``.

    Parameters
    ----------
    r_max : int
        Largest number of cliques, 1 to 4.

    step : float
        Grid step in [1e-4, 0.1].

    band : float
        Tolerance on ``|p0 - p3|``.

    Returns
    -------
    value : float or None
        Least ``max(p0, p3)`` found, ``None`` when no grid point is within
        the band.

    spec : CliqueSpec or None
    """
    r_max = check_scalar(r_max, "r_max", numbers.Integral, min_val=1,
                         max_val=4)
    step = check_scalar(step, "step", numbers.Real, min_val=1e-4,
                        max_val=0.1)
    band = check_scalar(band, "band", numbers.Real, min_val=0.0)
    K = int(round(1 / step))
    logger.info("grid search r<=%d, K=%d, band=%g", r_max, K, band)

    best = None
    for r in range(1, r_max + 1):
        def scan(start, stop, r=r):
            found = None
            for k1 in range(start + 1, stop + 1):
                for tail in _tails(k1, K - k1, r - 1):
                    points = np.column_stack(
                        [np.full(len(tail), k1, dtype=np.int64), tail])
                    found = _better(found, _evaluate(points, K, band))
            return found

        for found in map_ranges(scan, K):
            best = _better(best, None if found is None
                           else (found[0], tuple(x / K for x in found[1])))
    if best is None:
        logger.info("no grid point within band %g", band)
        return None, None

    value, alphas = best
    ints = tuple(int(round(a * K)) for a in alphas)
    refined, fine = _refine((value, ints), K, band)
    if refined is not None and refined[0] < value:
        value, alphas = refined[0], tuple(x / fine for x in refined[1])
    logger.info("grid minimum %.6f at %s", value, alphas)
    return value, CliqueSpec(alphas)
