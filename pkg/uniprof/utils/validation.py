"""Utilities for input validation."""

import numbers

import numpy as np

from sklearn.utils import check_scalar

from .._config import get_config
from ..exceptions import InputError, WorkCapExceeded
from .bitset import n_words


def check_n_vertices(n, what="vertex count", min_val=1):
    """Check a vertex count against type, lower bound and max_vertices."""
    n = check_scalar(n, what, numbers.Integral, min_val=min_val)
    max_vertices = get_config()["max_vertices"]
    if n > max_vertices:
        raise WorkCapExceeded(what, n, max_vertices,
                              hint="raise max_vertices with set_config")
    check_memory(n * n_words(n) * 8, f"adjacency of {n} vertices")
    return int(n)


def check_memory(n_bytes, what):
    limit = get_config()["memory_limit"]
    if n_bytes > limit:
        raise WorkCapExceeded(what, n_bytes, limit,
                              hint="raise memory_limit with set_config")


def check_work(estimate, what, hint=None):
    """Refuse eagerly when the predicted work is above work_cap."""
    cap = get_config()["work_cap"]
    if estimate > cap:
        raise WorkCapExceeded(what, estimate, cap, hint=hint)
    return estimate


def check_seed(seed):
    """Seeds are non-negative integers below 2**64."""
    return int(check_scalar(seed, "seed", numbers.Integral,
                            min_val=0, max_val=2**64 - 1))


def check_order(obj, l, what="order l"):
    """Check that an object has at least l vertices."""
    l = int(check_scalar(l, what, numbers.Integral, min_val=1))
    if obj.n < l:
        raise InputError(f"{what}={l} needs at least {l} vertices, "
                         f"got n={obj.n}")
    return l


def check_vertex_list(vs, n):
    """Validate a sequence of distinct vertices in range(n)."""
    vs = np.asarray(vs, dtype=np.int64).reshape(-1)
    if vs.size and (vs.min() < 0 or vs.max() >= n):
        bad = int(vs[(vs < 0) | (vs >= n)][0])
        raise InputError(f"vertex {bad} out of range 0..{n - 1}")
    if np.unique(vs).size != vs.size:
        values, counts = np.unique(vs, return_counts=True)
        raise InputError(f"duplicate vertex {int(values[counts > 1][0])}")
    return vs.astype(np.intp)
