"""Reference profile by enumeration of all l-subsets."""

import itertools
import logging
from math import comb

import numpy as np

from ..classes import enumerate_classes, classify_codes, labelled_codes
from ..exceptions import VerificationError
from ..utils.parallel import map_ranges
from ..utils.validation import check_order, check_work

logger = logging.getLogger(__name__)


def _pair_offset(n, s):
    """Position of the first pair (p, q) with p >= s in triu order."""
    return s * (2 * n - s - 1) // 2


def profile_exhaustive(obj, l):
    """Class counts of all induced l-vertex subobjects.

    Each subset ``a < ... < z`` is visited once: a prefix of ``l - 2``
    vertices followed by a pair taken from the tail of the pair list.

    Parameters
    ----------
    obj : Graph or Tournament

    l : int
        Order, 3 to 5.

    Returns
    -------
    counts : dict
        ClassId -> int for every class of order ``l``; the counts sum to
        C(n, l).
    """
    kind = obj.kind
    classes = enumerate_classes(kind, l)
    check_order(obj, l)
    n = obj.n
    total = comb(n, l)
    check_work(total, f"exhaustive {l}-profile of {n} vertices",
               hint="use sampled mode")
    logger.info("enumerating %d subsets of order %d", total, l)
    pairs = np.column_stack(np.triu_indices(n, k=1))

    def count(start, stop):
        acc = np.zeros(len(classes), dtype=np.int64)
        for a in range(start, stop):
            for rest in itertools.combinations(range(a + 1, n), l - 3):
                prefix = (a,) + rest
                tails = pairs[_pair_offset(n, prefix[-1] + 1):]
                if not len(tails):
                    continue
                subsets = np.empty((len(tails), l), dtype=np.intp)
                subsets[:, :l - 2] = prefix
                subsets[:, l - 2:] = tails
                codes = labelled_codes(obj.rows, subsets)
                acc += np.bincount(classify_codes(kind, l, codes),
                                   minlength=len(classes))
        return acc

    counts = np.sum(map_ranges(count, n - l + 1), axis=0)
    if int(counts.sum()) != total:
        raise VerificationError(f"enumerated {int(counts.sum())} subsets, "
                                f"expected {total}")
    return {c: int(x) for c, x in zip(classes, counts)}
