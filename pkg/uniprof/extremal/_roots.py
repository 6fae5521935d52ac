"""Bracketed polynomial roots: bisection, then a Newton polish."""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect, newton

logger = logging.getLogger(__name__)

NUDGE = 1e-9
XTOL = 1e-12


@dataclass(frozen=True)
class Root:
    """A root ``x`` with a sign-changing bracket ``[lo, hi]``."""
    x: float
    lo: float
    hi: float
    residual: float
    iterations: int


def bracketed_root(poly, lo, hi, nudge=NUDGE):
    """Root of ``poly`` in the open interval (lo, hi).

    The endpoints are moved inward by ``nudge`` and must bracket a sign
    change; otherwise RuntimeError is raised.

    Parameters
    ----------
    poly : numpy.polynomial.Polynomial

    lo, hi : float

    Returns
    -------
    root : Root
    """
    a, b = lo + nudge, hi - nudge
    fa, fb = poly(a), poly(b)
    if np.sign(fa) * np.sign(fb) > 0:
        raise RuntimeError(f"no sign change of {poly} on [{a}, {b}]")
    x, info = bisect(poly, a, b, xtol=XTOL, full_output=True)
    try:
        polished = float(newton(poly, x, fprime=poly.deriv(), tol=1e-15,
                                maxiter=20))
        if abs(polished - x) <= XTOL and abs(poly(polished)) <= abs(poly(x)):
            x = polished
    except RuntimeError:
        logger.debug("Newton polish did not converge at %r", x)
    r_lo, r_hi = max(a, x - XTOL / 2), min(b, x + XTOL / 2)
    return Root(float(x), float(r_lo), float(r_hi), float(abs(poly(x))),
                info.iterations)
