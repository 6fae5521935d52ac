"""Search for an induced path on five vertices."""

import logging

from ..base import is_graph
from ..exceptions import InputError
from ..utils.bitset import iter_bits
from ..utils.parallel import map_ranges
from ..utils.validation import check_order, check_work

logger = logging.getLogger(__name__)


def path5_work(g):
    """Predicted search nodes, n * max_degree**4 / 8."""
    return g.n * int(g.degrees.max()) ** 4 / 8


def _search(rows, closed, start, stop):
    for x1 in range(start, stop):
        f1 = closed[x1]
        for x2 in iter_bits(rows[x1]):
            f2 = f1 | closed[x2]
            for x3 in iter_bits(rows[x2] & ~f1):
                f3 = f2 | closed[x3]
                for x4 in iter_bits(rows[x3] & ~f2):
                    # x5 > x1 so every path is found from one end only
                    c5 = (rows[x4] & ~f3) >> (x1 + 1)
                    if c5:
                        x5 = (c5 & -c5).bit_length() + x1
                        return x1, x2, x3, x4, x5
    return None


def find_induced_path5(g):
    """Lexicographically least induced path x1-x2-x3-x4-x5 with x1 < x5.

    Returns
    -------
    path : tuple of 5 ints or None
    """
    if not is_graph(g):
        raise InputError("expected a Graph")
    check_order(g, 5)
    check_work(path5_work(g), "induced P5 search",
               hint="the graph is too dense for an exhaustive search")
    rows = g.int_rows
    closed = [r | (1 << v) for v, r in enumerate(rows)]
    hits = map_ranges(lambda a, b: _search(rows, closed, a, b), g.n)
    path = next((h for h in hits if h is not None), None)
    logger.info("induced P5: %s", path)
    return path
