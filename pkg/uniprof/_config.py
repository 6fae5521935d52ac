"""Global configuration, following the scikit-learn config pattern.

Limits are read by every operation that can run out of time or memory;
exceeding one raises :class:`uniprof.exceptions.WorkCapExceeded` before
any work is done.
"""

import os
from contextlib import contextmanager

_global_config = {
    "work_cap": int(os.environ.get("UNIPROF_WORK_CAP", 10**9)),
    "max_vertices": 20000,
    "memory_limit": 2**30,
    "n_jobs": 1,
}


def get_config():
    """Retrieve current values of the global configuration.

    Returns
    -------
    config : dict
        Keys are parameter names that can be passed to :func:`set_config`.
    """
    return _global_config.copy()


def set_config(work_cap=None, max_vertices=None, memory_limit=None,
               n_jobs=None):
    """Set global configuration.

    Parameters
    ----------
    work_cap : int, default=None
        Maximum number of predicted elementary operations (subset
        classifications, search nodes) an exhaustive operation may
        perform.

    max_vertices : int, default=None
        Largest vertex count accepted by constructions and parsers.

    memory_limit : int, default=None
        Largest estimated memory footprint in bytes of a single object
        or table.

    n_jobs : int, default=None
        Number of joblib workers used by partitioned reductions.
        Results do not depend on it.
    """
    if work_cap is not None:
        _global_config["work_cap"] = int(work_cap)
    if max_vertices is not None:
        _global_config["max_vertices"] = int(max_vertices)
    if memory_limit is not None:
        _global_config["memory_limit"] = int(memory_limit)
    if n_jobs is not None:
        _global_config["n_jobs"] = int(n_jobs)


@contextmanager
def config_context(**new_config):
    """Context manager for temporary global configuration changes.

    Examples
    --------
    >>> from uniprof import config_context
    >>> with config_context(work_cap=10**6):
    ...     pass
    """
    old_config = get_config()
    set_config(**new_config)
    try:
        yield
    finally:
        set_config(**old_config)
