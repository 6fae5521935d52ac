"""Seeded random streams.

All randomness comes from numpy's Philox4x64 counter-based generator keyed
by ``(seed, stream)``.  A stream is a pure function of its key, so objects
built row by row (one stream per row) or samples drawn chunk by chunk (one
stream per chunk) do not depend on how the work is split across workers.
"""

import numpy as np

from .validation import check_seed


def philox_stream(seed, stream):
    """Generator for stream number ``stream`` of ``seed``."""
    key = np.array([check_seed(seed), int(stream)], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))
