"""Critical cases of min max(p0, p3) over clique unions with p0 = p3.

A critical point either has all cliques equal and some isolated vertices
(interior cases, ``r`` cliques), or no isolated vertices and two clique
sizes ``alpha1 > alpha2`` taken ``s`` and ``t`` times (boundary cases).
Each case reduces to one polynomial equation ``p3 = p0`` on an interval
where ``p3 - p0`` is monotone.  With ``x = t * alpha2``:

* s = 1: ``p3 = (1-x)^3 + x^3/t^2``,
  ``p0 = 3x^2 - 2x^3 - 3x^2/t + 2x^3/t^2`` on ``0 < x < t/(t+1)``;
* s = 2: ``p3 = (1-x)^3/4 + x^3/t^2``,
  ``p0 = 3x/2 - x^3/2 - 3x^2/t + 2x^3/t^2`` on ``0 < x < t/(t+2)``.

Three or more equal cliques give ``p3 <= 1/9`` while Goodman's bound
forces ``p0 >= 1/4 - p3``, so those cases are infeasible.
"""

import logging
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import Polynomial

from ..exceptions import InputError
from ._roots import bracketed_root
from .theta import solve_cubic_theta

logger = logging.getLogger(__name__)

MAX_T = 10**6

X = Polynomial([0.0, 1.0])


@dataclass(frozen=True)
class CaseSpec:
    """One case of the analysis.

    ``at_least`` marks ``r``, ``s`` or ``t`` (whichever is the last one
    given) as a lower limit, e.g. ``boundary(s=1, t>=4)``.
    """
    kind: str
    r: int = None
    s: int = None
    t: int = None
    at_least: bool = False

    @classmethod
    def interior(cls, r, at_least=False):
        return cls("interior", r=r, at_least=at_least)

    @classmethod
    def boundary(cls, s, t=None, at_least=False):
        return cls("boundary", s=s, t=t, at_least=at_least)

    @property
    def label(self):
        ge = ">=" if self.at_least else "="
        if self.kind == "interior":
            return f"interior-r{'>=' if self.at_least else ''}{self.r}"
        if self.t is None:
            return f"boundary(s{ge}{self.s})"
        return f"boundary(s={self.s},t{ge}{self.t})"

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class CaseSolution:
    """Result of one case.

    ``value`` is ``p0 = p3`` at the root, or for ``is_bound`` rows the
    lower bound valid for every ``t`` in the range.  Infeasible cases have
    ``feasible = False`` and no value.
    ``interval`` is the admissible range of ``unknown`` and ``bracket``
    that of the root ``x`` of the case polynomial.
    """
    case: CaseSpec
    feasible: bool
    value: float = None
    unknown_name: str = None
    unknown: float = None
    x: float = None
    alphas: tuple = None
    interval: tuple = None
    bracket: tuple = None
    residual: float = None
    is_bound: bool = False
    note: str = field(default="", compare=False)

    @property
    def label(self):
        return self.case.label


@dataclass(frozen=True)
class Reference:
    """Published value of a case; ``decimals`` as printed."""
    unknown: float
    value: float
    decimals: int = 6
    value_is_lower_bound: bool = False

    @property
    def tol(self):
        return max(1e-5, 10.0**-self.decimals)


# reference constants, keyed by case label
REFERENCE = {
    # r = 1: a single clique of size alpha1
    "interior-r1": Reference(0.652704, 0.278, decimals=3),
    # r = 2: two equal cliques
    "interior-r2": Reference(0.442125, 0.172848),
    # s = 1, root in x = t * alpha2
    "boundary(s=1,t=2)": Reference(0.469285, 0.1753, decimals=4),
    "boundary(s=1,t=3)": Reference(0.409632, 0.2134, decimals=4),
    # p0(1/3) > 7/27 - 1/(3t) >= 7/27 - 1/12
    "boundary(s=1,t>=4)": Reference(1 / 3, 7 / 27 - 1 / 12),
    # s = 2, unknown alpha1; t = 1 is the tight case, value rho
    "boundary(s=2,t=1)": Reference(0.427373, 0.159181),
    "boundary(s=2,t=2)": Reference(0.436338, 1 / 6),
    # p0(x0) = 0.172848 - 0.040193/t + 0.003102/t^2 >= 0.159450
    "boundary(s=2,t>=3)": Reference(0.115749, 0.159450,
                                    value_is_lower_bound=True),
}


def _case_polynomials(case):
    """(p3, p0, interval, unknown name, alphas as functions of the root)."""
    if case.kind == "interior":
        r = case.r
        beta = 1 - r * X
        p3 = r * X**3
        if r == 1:
            p0 = beta**3 + 3 * beta**2 * X
        else:
            p0 = beta**3 + 3 * beta**2 * 2 * X + 6 * beta * X**2
        return p3, p0, (0.0, 1.0 / r), "alpha1", lambda a: (a,) * r
    s, t = case.s, case.t
    if s == 1:
        p3 = (1 - X)**3 + X**3 / t**2
        p0 = 3 * X**2 - 2 * X**3 - 3 * X**2 / t + 2 * X**3 / t**2
        return p3, p0, (0.0, t / (t + 1)), "x", \
            lambda x: (1 - x,) + (x / t,) * t
    p3 = (1 - X)**3 / 4 + X**3 / t**2
    p0 = 1.5 * X - 0.5 * X**3 - 3 * X**2 / t + 2 * X**3 / t**2
    return p3, p0, (0.0, t / (t + 2)), "alpha1", \
        lambda x: ((1 - x) / 2,) * 2 + (x / t,) * t


def _check_case(case):
    if not isinstance(case, CaseSpec):
        raise InputError("expected a CaseSpec")
    if case.kind == "interior":
        if case.r is None or case.r < 1 or case.at_least and case.r < 3:
            raise InputError(f"invalid interior case {case.label}")
        return
    if case.kind != "boundary" or case.s is None or case.s < 1:
        raise InputError(f"invalid case {case!r}")
    if case.s >= 3:
        return
    if case.t is None or case.t < 1:
        raise InputError(f"case {case.label} needs t >= 1")
    if not case.at_least and case.t > MAX_T:
        raise InputError(f"t={case.t} exceeds {MAX_T}")
    if case.at_least and case.t < {1: 2, 2: 3}[case.s]:
        raise InputError(f"no lower bound is available for {case.label}")


def _solve_equation(case):
    p3, p0, domain, name, alphas = _case_polynomials(case)
    tau = p3 - p0
    if name == "alpha1":
        interval = tuple(sorted(float(alphas(v)[0]) for v in domain))
    else:
        interval = domain
    if not np.any(p0.coef):
        return CaseSolution(case, False, interval=interval,
                            note="p0 vanishes identically while p3 > 0")
    try:
        root = bracketed_root(tau, *domain)
    except RuntimeError:
        return CaseSolution(case, False, interval=interval,
                            note="p3 - p0 has no sign change")
    x = root.x
    a = alphas(x)
    unknown = a[0] if name == "alpha1" else x
    return CaseSolution(case, True, value=float(p0(x)), unknown_name=name,
                        unknown=unknown, x=x, alphas=a, interval=interval,
                        bracket=(root.lo, root.hi), residual=root.residual)


def _lower_bound(case):
    t = case.t
    if case.s == 1:
        p3, p0, interval, _, _ = _case_polynomials(CaseSpec.boundary(1, t))
        if not (p3 - p0)(1 / 3) > 0:
            raise RuntimeError(f"p3 - p0 is not positive at 1/3 for t={t}")
        return CaseSolution(case, True, value=7 / 27 - 1 / (3 * t),
                            unknown_name="x", unknown=1 / 3, x=1 / 3,
                            interval=interval, is_bound=True,
                            note=f"p0(1/3) > 7/27 - 1/(3t), least at t={t}")
    # x0 solves the t-free part of p3 - p0 = 0
    base = Polynomial([0.25, -2.25, 0.75, 0.25])
    root = bracketed_root(base, 0.0, 1.0)
    _, p0, interval, _, _ = _case_polynomials(CaseSpec.boundary(2, t))
    return CaseSolution(case, True, value=float(p0(root.x)),
                        unknown_name="x", unknown=root.x, x=root.x,
                        interval=interval, bracket=(root.lo, root.hi),
                        residual=root.residual, is_bound=True,
                        note=f"p0(x0) increases in t, least at t={t}")


def solve_case(case):
    """Solve one case.

    Parameters
    ----------
    case : CaseSpec

    Returns
    -------
    solution : CaseSolution
        Infeasible cases are returned with ``feasible = False``.
    """
    _check_case(case)
    if case.kind == "interior" and case.r >= 3 or \
            case.kind == "boundary" and case.s >= 3:
        sol = CaseSolution(case, False,
                           note="p3 <= 1/9 and p0 >= 1/4 - p3 > p3")
    elif case.at_least:
        sol = _lower_bound(case)
    else:
        sol = _solve_equation(case)
    logger.debug("%s: feasible=%s value=%s", case.label, sol.feasible,
                 sol.value)
    return sol


CASES = (
    CaseSpec.interior(1),
    CaseSpec.interior(2),
    CaseSpec.interior(3, at_least=True),
    CaseSpec.boundary(1, 1),
    CaseSpec.boundary(1, 2),
    CaseSpec.boundary(1, 3),
    CaseSpec.boundary(1, 4, at_least=True),
    CaseSpec.boundary(2, 1),
    CaseSpec.boundary(2, 2),
    CaseSpec.boundary(2, 3),
    CaseSpec.boundary(2, 3, at_least=True),
    CaseSpec.boundary(3, at_least=True),
)


def enumerate_cases():
    """Solve every case of the analysis, in a fixed order."""
    solutions = [solve_case(c) for c in CASES]
    best = minimum_case(solutions)
    logger.info("minimum %.6f at %s (rho=%.6f)", best.value, best.label,
                solve_cubic_theta().rho)
    return solutions


def minimum_case(solutions):
    """Feasible solution of least value; the first one on ties."""
    feasible = [s for s in solutions if s.feasible]
    return min(feasible, key=lambda s: s.value)


def compare_reference(solution):
    """Deviation of a solution from its reference constant.

    Returns ``None`` when the case has no reference; otherwise a dict with
    the reference values, absolute deviations and ``ok``.
    """
    ref = REFERENCE.get(solution.label)
    if ref is None:
        return None
    if not solution.feasible:
        return {"reference": ref, "ok": False}
    du = abs(solution.unknown - ref.unknown)
    if ref.value_is_lower_bound:
        dv = max(0.0, ref.value - solution.value)
    else:
        dv = abs(solution.value - ref.value)
    ok = du <= 1e-5 and dv <= ref.tol
    return {"reference": ref, "unknown_deviation": du,
            "value_deviation": dv, "ok": ok}
