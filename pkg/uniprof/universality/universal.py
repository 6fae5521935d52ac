"""l-universality: does every l-vertex class occur as an induced subobject?"""

import logging
import numbers
from dataclasses import dataclass
from math import comb

from ..classes import KNOWN_CLASS_COUNTS, MAX_ENUMERATED, MAX_SAMPLED
from ..exceptions import InputError
from ..profiles import class_counts, profile_montecarlo
from ..utils.validation import check_order

logger = logging.getLogger(__name__)

MODES = ("exhaustive", "sampled")


@dataclass(frozen=True)
class UniversalityReport:
    """Outcome of :func:`is_l_universal`.

    In exhaustive mode ``universal`` is exact and ``missing`` lists the
    absent classes.  In sampled mode classes can only be found:
    ``universal`` is True when every class was seen and None otherwise,
    and ``missing`` lists the classes not found (orders up to 5) while
    ``unseen`` counts them for every order.
    """
    kind: str
    l: int
    mode: str
    universal: bool
    missing: tuple
    counts: dict
    total: int
    unseen: int
    samples: int = None
    seed: int = None

    @property
    def sampled(self):
        return self.mode == "sampled"


def is_l_universal(obj, l, mode="exhaustive", samples=None, seed=0):
    """Check whether ``obj`` contains every l-vertex class induced.

    Parameters
    ----------
    obj : Graph or Tournament

    l : int
        Order, 3 to 5 in exhaustive mode and 3 to 8 in sampled mode.

    mode : {"exhaustive", "sampled"}, default="exhaustive"

    samples : int, default=None
        Number of sampled subsets, required in sampled mode.

    seed : int, default=0

    Returns
    -------
    report : UniversalityReport
    """
    if mode not in MODES:
        raise InputError(f"mode must be one of {MODES}, got {mode!r}")
    if not isinstance(l, numbers.Integral) or isinstance(l, bool):
        raise InputError(f"order l must be an integer, got {l!r}")
    l = int(l)
    if mode == "exhaustive":
        if not 3 <= l <= MAX_ENUMERATED:
            raise InputError(f"exhaustive mode needs 3 <= l <= "
                             f"{MAX_ENUMERATED}; use sampled mode up to "
                             f"l={MAX_SAMPLED}")
        check_order(obj, l)
        counts = class_counts(obj, l)
        missing = tuple(c for c, x in counts.items() if x == 0)
        report = UniversalityReport(obj.kind, l, mode, not missing, missing,
                                    counts, comb(obj.n, l), len(missing))
    else:
        if samples is None:
            raise InputError("sampled mode needs a sample count")
        estimate = profile_montecarlo(obj, l, samples, seed)
        counts = {c: int(x) for c, x in zip(estimate.classes,
                                            estimate.counts)}
        found = sum(1 for x in counts.values() if x > 0)
        unseen = KNOWN_CLASS_COUNTS[obj.kind, l] - found
        missing = tuple(c for c, x in counts.items() if x == 0)
        report = UniversalityReport(obj.kind, l, mode,
                                    True if unseen == 0 else None, missing,
                                    counts, estimate.samples, unseen,
                                    estimate.samples, estimate.seed)
    logger.info("%d-universality (%s): universal=%s, %d classes missing", l,
                mode, report.universal, report.unseen)
    return report
