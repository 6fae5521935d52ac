"""Largest transitive subtournament."""

import logging

from ..base import is_tournament
from ..exceptions import InputError, WorkCapExceeded
from ..utils.bitset import iter_bits

logger = logging.getLogger(__name__)

MAX_ORDER = 24


def transitive_lower_bound(n):
    """Every tournament on n vertices has a transitive subtournament of
    this order."""
    return n.bit_length()


def max_transitive(t):
    """Order of the largest transitive subtournament, tr(T).

    A transitive subtournament inside the vertex set ``S`` is a source
    ``v`` followed by one inside ``S & N+(v)``; sets are memoised.
    """
    if not is_tournament(t):
        raise InputError("expected a Tournament")
    if t.n > MAX_ORDER:
        raise WorkCapExceeded("max transitive subtournament", t.n, MAX_ORDER,
                              hint=f"only tournaments with at most "
                                   f"{MAX_ORDER} vertices are searched")
    out = t.int_rows
    memo = {0: 0}

    def best(S):
        if S in memo:
            return memo[S]
        options = sorted(((S & out[v]).bit_count(), v) for v in iter_bits(S))
        value = 0
        for size, v in reversed(options):
            if size + 1 <= value:
                break
            value = max(value, 1 + best(S & out[v]))
        memo[S] = value
        return value

    result = best((1 << t.n) - 1)
    logger.info("tr(T)=%d for n=%d (%d sets)", result, t.n, len(memo))
    return result
