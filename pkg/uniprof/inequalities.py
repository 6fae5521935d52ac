"""Finite-n checks of the profile inequalities and counting identities.

Every check is evaluated in exact rational arithmetic.  Tournament
inequalities carry an explicit allowance for the finite order:

====  ==============================  ======================
name  inequality                      allowance (counts)
====  ==============================  ======================
a     C4 <= T4                        3 C(n,4) / (n-2)
b     T4 >= 3/8 C(n,4)                3 C(n,4) / n
c     T4 + L4 >= 1/2 C(n,4)           3 C(n,4) / n
d     T4 + W4 >= 1/2 C(n,4)           3 C(n,4) / n
e     c4 >= 6 c3^2                    10 / n (densities)
====  ==============================  ======================

The allowance of (a) is exact: circular tournaments meet it with
equality.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .base import is_graph, is_tournament
from .exceptions import InputError, VerificationError
from .extremal.densities import (goodman_floor, goodman_floor_slack,
                                 goodman_slack)
from .profiles import profile3_graph, profile4_tournament, arc_cycle_counts
from .profiles import triangle_count

logger = logging.getLogger(__name__)

SUITES = ("goodman", "tournament-inequalities", "identities")


@dataclass(frozen=True)
class Check:
    """One evaluated inequality or identity.

    ``lhs`` and ``bound`` are exact; ``slack = lhs - bound`` is scaled to
    densities (divided by ``scale``) so that checks are comparable.
    ``details`` holds further named values reported with the check.
    """
    name: str
    description: str
    lhs: Fraction
    bound: Fraction
    scale: int = 1
    identity: bool = False
    details: dict = field(default_factory=dict, compare=False)

    @property
    def slack(self):
        return float((self.lhs - self.bound) / self.scale)

    @property
    def passed(self):
        if self.identity:
            return self.lhs == self.bound
        return self.lhs >= self.bound

    @property
    def tight(self):
        return self.lhs == self.bound


def _bincomb(values, k):
    return sum(comb(int(v), k) for v in values)


def verify_goodman(g):
    """N0 + N3 against the floor n(n-1)(n-5)/24.

    ``details`` carries ``goodman_slack``, the limit slack p0 + p3 - 1/4,
    and ``floor_slack``, the density of the floor minus 1/4; the first is
    never below the second.
    """
    if not is_graph(g):
        raise InputError("the goodman suite needs a graph")
    p = profile3_graph(g)
    N0, _, _, N3 = p.counts
    details = {"goodman_slack": goodman_slack(p),
               "floor_slack": goodman_floor_slack(g.n)}
    return [Check("goodman", "N0 + N3 >= n(n-1)(n-5)/24",
                  Fraction(N0 + N3), goodman_floor(g.n), scale=comb(g.n, 3),
                  details=details)]


def verify_tournament_inequalities(t, profile=None):
    """Inequalities (a) to (e) with their finite-n allowances.

    Parameters
    ----------
    t : Tournament
        At least 4 vertices.

    profile : TournamentProfile4, default=None
        Reused when given.

    Returns
    -------
    checks : list of Check
    """
    if not is_tournament(t):
        raise InputError("the tournament-inequalities suite needs a "
                         "tournament")
    if profile is None:
        profile = profile4_tournament(t)
    n = t.n
    N4 = comb(n, 4)
    T4, C4, W4, L4 = (Fraction(c) for c in profile.counts4)
    slack_a = Fraction(3 * N4, n - 2)
    slack = Fraction(3 * N4, n)
    c4 = C4 / N4
    c3 = Fraction(profile.cyc3, comb(n, 3))
    checks = [
        Check("a", "c4 <= t4", T4 - C4 + slack_a, Fraction(0), scale=N4),
        Check("b", "t4 >= 3/8", T4, Fraction(3, 8) * N4 - slack, scale=N4),
        Check("c", "t4 + l4 >= 1/2", T4 + L4, Fraction(N4, 2) - slack,
              scale=N4),
        Check("d", "t4 + w4 >= 1/2", T4 + W4, Fraction(N4, 2) - slack,
              scale=N4),
        Check("e", "c4 >= 6 c3^2", c4, 6 * c3**2 - Fraction(10, n)),
    ]
    for c in checks:
        logger.info("(%s) %s: slack %.3g%s", c.name, c.description, c.slack,
                    "" if c.passed else " FAILED")
    return checks


def verify_identities(obj):
    """Exact counting identities for a graph or tournament."""
    n = obj.n
    checks = []
    if is_graph(obj):
        p = profile3_graph(obj)
        N0, N1, N2, N3 = p.counts
        checks.append(Check("sum3", "N0+N1+N2+N3 = C(n,3)",
                            Fraction(sum(p.counts)), Fraction(comb(n, 3)),
                            identity=True))
        checks.append(Check("edges", "2m = sum deg", Fraction(2 * obj.m),
                            Fraction(int(obj.degrees.sum())), identity=True))
        checks.append(Check("paths", "N2 + 3 N3 = sum C(deg, 2)",
                            Fraction(N2 + 3 * N3),
                            Fraction(_bincomb(obj.degrees, 2)),
                            identity=True))
        checks.append(Check("triangles", "N3 = triangle count",
                            Fraction(N3), Fraction(triangle_count(obj)),
                            identity=True))
        return checks
    if not is_tournament(obj):
        raise InputError("expected a Graph or a Tournament")
    p = profile4_tournament(obj)
    T4, C4, W4, L4 = p.counts4
    cyc3 = p.cyc3
    arcs = arc_cycle_counts(obj)
    s = arcs.s.astype(np.int64)
    checks += [
        Check("sum4", "T4+C4+W4+L4 = C(n,4)", Fraction(T4 + C4 + W4 + L4),
              Fraction(comb(n, 4)), identity=True),
        Check("sum3", "trans3+cyc3 = C(n,3)", Fraction(sum(p.counts3)),
              Fraction(comb(n, 3)), identity=True),
        Check("out3", "T4+W4 = sum C(d+,3)", Fraction(T4 + W4),
              Fraction(_bincomb(obj.out_degrees, 3)), identity=True),
        Check("in3", "T4+L4 = sum C(d-,3)", Fraction(T4 + L4),
              Fraction(_bincomb(obj.in_degrees, 3)), identity=True),
        Check("arcs4", "C4 = sum C(s_e,2)", Fraction(C4),
              Fraction(int((s * (s - 1) // 2).sum())), identity=True),
        Check("cyc4", "cyc3 (n-3) = 2 C4 + W4 + L4",
              Fraction(cyc3 * (n - 3)), Fraction(2 * C4 + W4 + L4),
              identity=True),
        Check("arcs3", "sum s_e = 3 cyc3", Fraction(arcs.total),
              Fraction(3 * cyc3), identity=True),
        Check("cyc3max", "cyc3 <= (n^3-n)/24",
              Fraction(n**3 - n, 24), Fraction(cyc3)),
    ]
    return checks


def run_suite(obj, suite):
    """Run a named suite; a kind mismatch raises InputError."""
    if suite == "goodman":
        return verify_goodman(obj)
    if suite == "tournament-inequalities":
        return verify_tournament_inequalities(obj)
    if suite == "identities":
        return verify_identities(obj)
    raise InputError(f"suite must be one of {SUITES}, got {suite!r}")


def assert_passed(checks):
    """Raise VerificationError naming the first failed check."""
    for c in checks:
        if not c.passed:
            raise VerificationError(f"check ({c.name}) {c.description} "
                                    f"failed: slack {c.slack:.6g}")
    return checks
