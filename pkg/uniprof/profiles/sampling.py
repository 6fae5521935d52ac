"""Monte Carlo estimation of local profiles."""

import logging
import numbers

import numpy as np
from sklearn.utils import check_scalar

from ..classes import (enumerate_classes, canonical_codes, class_of_code,
                       labelled_codes, MAX_ENUMERATED, MAX_SAMPLED)
from ..exceptions import InputError
from ..utils.parallel import map_ranges
from ..utils.random import philox_stream
from ..utils.validation import check_order, check_seed
from ._types import ProfileEstimate

logger = logging.getLogger(__name__)

CHUNK = 8192


def sample_subsets(n, l, size, rng):
    """``size`` uniform l-subsets of range(n), one per row, sorted.

    Rows with a repeated vertex are redrawn, which leaves the distribution
    of the accepted rows uniform over l-subsets.  When ``l * l > n`` a row
    is instead the first l entries of a random permutation of range(n).
    """
    if l * l > n:
        perms = rng.permuted(np.tile(np.arange(n, dtype=np.intp), (size, 1)),
                             axis=1)
        return np.sort(perms[:, :l], axis=1)
    out = np.empty((size, l), dtype=np.intp)
    todo = np.arange(size)
    while todo.size:
        draw = np.sort(rng.integers(0, n, size=(todo.size, l)), axis=1)
        ok = (np.diff(draw, axis=1) > 0).all(axis=1)
        out[todo[ok]] = draw[ok]
        todo = todo[~ok]
    return out


def _chunk_codes(obj, l, samples, seed, start, stop):
    codes = []
    for c in range(start, stop):
        size = min(CHUNK, samples - c * CHUNK)
        subsets = sample_subsets(obj.n, l, size, philox_stream(seed, c))
        codes.append(labelled_codes(obj.rows, subsets))
    return np.concatenate(codes)


def profile_montecarlo(obj, l, samples, seed):
    """Estimate the l-profile from uniformly sampled l-subsets.

    Chunk ``c`` of ``CHUNK`` samples draws from stream ``c`` of ``seed``, so
    the estimate does not depend on the number of workers.

    Parameters
    ----------
    obj : Graph or Tournament

    l : int
        Order, 3 to 8.

    samples : int
        Number of sampled subsets.

    seed : int

    Returns
    -------
    estimate : ProfileEstimate
    """
    if not isinstance(l, (int, np.integer)) or not 3 <= l <= MAX_SAMPLED:
        raise InputError(f"order l must be in 3..{MAX_SAMPLED}, got {l!r}")
    check_order(obj, l)
    samples = int(check_scalar(samples, "samples", numbers.Integral,
                               min_val=1))
    seed = check_seed(seed)
    n_chunks = -(-samples // CHUNK)
    logger.info("sampling %d subsets of order %d (seed %d)", samples, l, seed)
    codes = np.concatenate(map_ranges(
        lambda a, b: _chunk_codes(obj, l, samples, seed, a, b), n_chunks))
    canon = canonical_codes(obj.kind, l, codes)
    observed, counts = np.unique(canon, return_counts=True)
    if l <= MAX_ENUMERATED:
        classes = enumerate_classes(obj.kind, l)
        full = np.zeros(len(classes), dtype=np.int64)
        for code, count in zip(observed.tolist(), counts.tolist()):
            full[class_of_code(obj.kind, l, code).index] = count
        counts = full
    else:
        classes = tuple(class_of_code(obj.kind, l, code)
                        for code in observed.tolist())
    return ProfileEstimate(obj.kind, l, tuple(classes), counts.astype(np.int64),
                           samples, seed)
