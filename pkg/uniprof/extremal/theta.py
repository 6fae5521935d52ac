"""The threshold constant rho = 6 theta^2 (1 - 2 theta)."""

import logging
from dataclasses import dataclass
from functools import lru_cache

from numpy.polynomial import Polynomial

from ._roots import bracketed_root

logger = logging.getLogger(__name__)

# theta^3 + theta^2 - theta + 1/6
CUBIC = Polynomial([1 / 6, -1.0, 1.0, 1.0])

THETA_BRACKET = (0.3, 0.5)
SECOND_BRACKET = (0.1, 0.3)


@dataclass(frozen=True)
class ExtremalConstants:
    """Largest root ``theta`` of the cubic, ``rho`` and the second root."""
    theta: float
    rho: float
    residual: float
    second_root: float
    bracket: tuple


@lru_cache(maxsize=None)
def solve_cubic_theta():
    """Solve theta^3 + theta^2 - theta + 1/6 = 0 on [0.3, 0.5].

    Returns
    -------
    constants : ExtremalConstants
    """
    root = bracketed_root(CUBIC, *THETA_BRACKET)
    second = bracketed_root(CUBIC, *SECOND_BRACKET)
    theta = root.x
    rho = 6 * theta**2 * (1 - 2 * theta)
    logger.info("theta=%.12f rho=%.12f residual=%.2e", theta, rho,
                root.residual)
    return ExtremalConstants(theta, rho, root.residual, second.x,
                             (root.lo, root.hi))
