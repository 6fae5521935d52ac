"""Limit densities of clique unions and the Goodman bound."""

from fractions import Fraction
from math import comb

import numpy as np

from ..base import CliqueSpec
from ..exceptions import InputError
from ..profiles import Profile3

GOODMAN_LIMIT = 0.25


def power_sum_densities(P1, P2, P3, beta):
    """(p0, p3) from the power sums of the clique sizes; broadcasts.

    ``p3 = P3`` and ``p0 = 6 e3 + 6 beta e2 + 3 beta^2 P1 + beta^3`` with
    the elementary symmetric sums ``e2``, ``e3`` written in power sums.
    """
    e2 = (P1 * P1 - P2) / 2
    e3 = (P1**3 - 3 * P1 * P2 + 2 * P3) / 6
    p0 = 6 * e3 + 6 * beta * e2 + 3 * beta**2 * P1 + beta**3
    return p0, P3


def clique_union_densities(spec):
    """Limit 3-profile ``(p0, p1, p2, p3)`` of a clique union.

    Parameters
    ----------
    spec : CliqueSpec

    Returns
    -------
    densities : tuple of float
        ``p2`` is always 0.
    """
    if not isinstance(spec, CliqueSpec):
        raise InputError("expected a CliqueSpec")
    a = np.asarray(spec.alphas, dtype=float)
    p0, p3 = power_sum_densities(a.sum(), (a**2).sum(), (a**3).sum(),
                                 spec.beta)
    p0 = float(min(max(p0, 0.0), 1.0))
    p3 = float(p3)
    p1 = max(1.0 - p0 - p3, 0.0)
    return p0, p1, 0.0, p3


def goodman_slack(profile, n=None):
    """``p0 + p3 - 1/4``; negative values are possible at finite n."""
    if not isinstance(profile, Profile3):
        raise InputError("expected a Profile3")
    if n is not None and n != profile.n:
        raise InputError(f"profile is for n={profile.n}, not {n}")
    p0, _, _, p3 = profile.densities
    return p0 + p3 - GOODMAN_LIMIT


def goodman_floor(n):
    """Lower bound on N0 + N3 over graphs on n vertices, n(n-1)(n-5)/24."""
    return Fraction(n * (n - 1) * (n - 5), 24)



def goodman_floor_slack(n):
    """Density of :func:`goodman_floor` minus 1/4, equal to -3/(4(n-2)).

    The finite-n counterpart of :func:`goodman_slack`: no graph on ``n``
    vertices has ``goodman_slack`` below this value.
    """
    if n < 3:
        raise InputError(f"the Goodman floor needs n >= 3, got {n}")
    return float(goodman_floor(n) / comb(n, 3)) - GOODMAN_LIMIT
