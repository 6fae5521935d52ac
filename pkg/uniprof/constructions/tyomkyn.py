"""Recursive pentagon blow-ups.

Level 1 is the pentagon C5.  Level k takes five copies of level k-1 and
joins copies b and b+1 (mod 5) completely; copy b occupies the index range
``[b * 5**(k-1), (b+1) * 5**(k-1))``.  Every level is self-complementary,
has edge density exactly 1/2 and no induced path on five vertices.
"""

import logging
import numbers
from dataclasses import dataclass
from math import comb

import numpy as np
from sklearn.utils import check_scalar

from ..base import Graph
from ..exceptions import VerificationError, WorkCapExceeded
from ..utils.bitset import pack_rows

logger = logging.getLogger(__name__)

MAX_LEVEL = 4

_PENTAGON = np.roll(np.eye(5, dtype=np.int8), 1, axis=1)
_PENTAGON = (_PENTAGON + _PENTAGON.T).astype(bool)


@dataclass(frozen=True)
class TyomkynLevel:
    """Exact parameters of level ``k``: order, edges and triangles."""
    k: int
    n: int
    m: int
    triangles: int

    @property
    def p3(self):
        return self.triangles / comb(self.n, 3)


def tyomkyn_level(k):
    """Level parameters from the recurrences, without building the graph.

    ``n_k = 5 n``, ``m_k = 5 m + 5 n**2`` and ``T_k = 5 T + 10 m n`` in
    terms of level k-1, starting from the pentagon.
    """
    k = check_scalar(k, "k", numbers.Integral, min_val=1)
    n, m, T = 5, 5, 0
    for _ in range(k - 1):
        n, m, T = 5 * n, 5 * m + 5 * n * n, 5 * T + 10 * m * n
    if 4 * m != n * (n - 1):
        raise VerificationError(f"level {k}: m={m} is not n(n-1)/4")
    return TyomkynLevel(int(k), n, m, T)


def tyomkyn_graph(k):
    """Level k graph on 5**k vertices, 1 <= k <= 4."""
    k = check_scalar(k, "k", numbers.Integral, min_val=1)
    if k > MAX_LEVEL:
        raise WorkCapExceeded("Tyomkyn level", 5**k, 5**MAX_LEVEL,
                              hint=f"levels above {MAX_LEVEL} are refused")
    dense = _PENTAGON
    for _ in range(k - 1):
        size = len(dense)
        dense = (np.kron(np.eye(5, dtype=bool), dense)
                 | np.kron(_PENTAGON, np.ones((size, size), dtype=bool)))
    logger.info("pentagon blow-up level %d on %d vertices", k, len(dense))
    return Graph(len(dense), pack_rows(dense))
