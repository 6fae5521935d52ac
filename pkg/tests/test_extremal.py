import itertools
from math import comb

import numpy as np
import pytest

from uniprof import CliqueSpec
from uniprof.constructions import tyomkyn_graph
from uniprof.exceptions import InputError
from uniprof.extremal import (solve_cubic_theta, enumerate_cases, solve_case,
                              minimum_case, compare_reference, CaseSpec,
                              REFERENCE, clique_union_densities,
                              goodman_floor, goodman_slack, grid_search_min)
from uniprof.extremal.theta import CUBIC
from uniprof.profiles import profile3_graph


def test_theta_rho():
    c = solve_cubic_theta()
    assert c.theta == pytest.approx(0.427373, abs=1e-6)
    assert c.rho == pytest.approx(0.159181, abs=1e-6)
    assert c.residual <= 1e-12
    assert abs(CUBIC(c.theta)) <= 1e-12
    assert c.rho == pytest.approx(6 * c.theta**2 * (1 - 2 * c.theta))
    assert c.bracket[0] <= c.theta <= c.bracket[1]
    assert c.bracket[1] - c.bracket[0] <= 2e-12
    assert c.second_root == pytest.approx(0.234643, abs=1e-6)
    assert abs(CUBIC(c.second_root)) <= 1e-12


def test_case_table():
    rho = solve_cubic_theta().rho
    solutions = enumerate_cases()
    assert len(solutions) == 12
    labels = {s.label for s in solutions}
    assert set(REFERENCE) <= labels
    for s in solutions:
        cmp = compare_reference(s)
        if cmp is not None:
            assert cmp["ok"], s.label
    best = minimum_case(solutions)
    assert best.label == "boundary(s=2,t=1)"
    assert best.value == pytest.approx(rho, abs=1e-9)
    assert best.unknown == pytest.approx(solve_cubic_theta().theta, abs=1e-9)
    for s in solutions:
        if not s.feasible or s is best:
            continue
        if s.is_bound:
            assert s.value > rho
        else:
            assert s.value > rho + 1e-3, s.label


def test_bound_rows():
    s1 = solve_case(CaseSpec.boundary(1, 4, at_least=True))
    assert s1.is_bound
    assert s1.value == pytest.approx(7 / 27 - 1 / 12)
    assert s1.value >= 0.175925
    s2 = solve_case(CaseSpec.boundary(2, 3, at_least=True))
    assert s2.is_bound
    assert s2.value >= 0.159450
    assert s2.value == pytest.approx(0.159795, abs=1e-6)
    assert s2.x == pytest.approx(0.115749, abs=1e-6)


def test_infeasible_cases():
    for case in [CaseSpec.interior(3, at_least=True),
                 CaseSpec.boundary(3, at_least=True),
                 CaseSpec.boundary(1, 1)]:
        s = solve_case(case)
        assert not s.feasible
        assert s.value is None
    with pytest.raises(InputError):
        solve_case(CaseSpec.boundary(1, 1, at_least=True))
    with pytest.raises(InputError):
        solve_case(CaseSpec.interior(0))


def test_case_roots_equalise():
    for s in enumerate_cases():
        if s.feasible and not s.is_bound:
            p0, _, _, p3 = clique_union_densities(CliqueSpec(s.alphas))
            assert p0 == pytest.approx(p3, abs=1e-9)
            assert p0 == pytest.approx(s.value, abs=1e-9)


def test_unknown_within_interval():
    for s in enumerate_cases():
        if s.feasible:
            lo, hi = s.interval
            assert lo <= s.unknown <= hi, s.label
    tight = solve_case(CaseSpec.boundary(2, 1))
    assert tight.unknown_name == "alpha1"
    assert tight.interval == pytest.approx((1 / 3, 1 / 2))
    assert tight.x == pytest.approx(1 - 2 * tight.unknown)
    s22 = solve_case(CaseSpec.boundary(2, 2))
    assert s22.interval == pytest.approx((1 / 4, 1 / 2))
    assert solve_case(CaseSpec.interior(2)).interval == (0.0, 0.5)


def test_clique_union_densities():
    c = solve_cubic_theta()
    spec = CliqueSpec((c.theta, c.theta, 1 - 2 * c.theta), 0.0)
    p0, p1, p2, p3 = clique_union_densities(spec)
    assert p0 == pytest.approx(c.rho, abs=1e-9)
    assert p3 == pytest.approx(c.rho, abs=1e-9)
    assert p2 == 0.0
    assert p0 + p1 + p2 + p3 == pytest.approx(1.0)
    assert clique_union_densities(CliqueSpec([], 1.0))[0] == 1.0


def _monochromatic_table(n):
    """N0 + N3 of every labelled graph on n vertices, indexed by edge code."""
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: k for k, p in enumerate(pairs)}
    codes = np.arange(2 ** len(pairs), dtype=np.int64)
    total = np.zeros(len(codes), dtype=np.int16)
    for a, b, c in itertools.combinations(range(n), 3):
        edges = sum((codes >> index[p]) & 1
                    for p in [(a, b), (a, c), (b, c)])
        total += (edges == 0) | (edges == 3)
    return codes, index, total


def _min_monochromatic(n):
    """Least N0 + N3 over all labelled graphs on n vertices."""
    return int(_monochromatic_table(n)[2].min())


def _min_monochromatic_extended(n):
    """Least N0 + N3 over all labelled graphs on n + 1 vertices.

    Vertex n is added with every neighbourhood ``star``; the triple
    {a, b, n} is monochromatic when ab, an and bn agree.
    """
    codes, index, base = _monochromatic_table(n)
    best = None
    for star in range(2 ** n):
        ones = zeros = 0
        for (a, b), k in index.items():
            sa, sb = (star >> a) & 1, (star >> b) & 1
            if sa and sb:
                ones |= 1 << k
            elif not sa and not sb:
                zeros |= 1 << k
        extra = (np.bitwise_count(codes & ones)
                 + np.bitwise_count(~codes & zeros))
        value = int((base + extra).min())
        best = value if best is None else min(best, value)
    return best


def test_goodman_floor_exhaustive():
    for n in range(3, 8):
        assert _min_monochromatic(n) >= goodman_floor(n)
    assert float(goodman_floor(7)) == 3.5


def test_goodman_floor_exhaustive_order8():
    # all 2**28 labelled graphs on 8 vertices
    assert _min_monochromatic_extended(6) == _min_monochromatic(7)
    best = _min_monochromatic_extended(7)
    assert goodman_floor(8) == 7
    assert best >= goodman_floor(8)
    assert best == 8


def test_goodman_tight_on_tyomkyn():
    p = profile3_graph(tyomkyn_graph(2))
    assert p.counts[0] + p.counts[3] == goodman_floor(25) == 500
    assert goodman_slack(p) == pytest.approx(500 / comb(25, 3) - 0.25)


def test_grid_oracle():
    c = solve_cubic_theta()
    value, spec = grid_search_min(3, 0.005, 0.01)
    assert abs(value - c.rho) <= 0.005
    assert spec.alphas[0] == pytest.approx(c.theta, abs=0.02)
    assert spec.alphas[1] == pytest.approx(c.theta, abs=0.02)


def test_grid_parameters():
    with pytest.raises(ValueError):
        grid_search_min(5, 0.01, 0.01)
    with pytest.raises(ValueError):
        grid_search_min(2, 0.5, 0.01)
    value, spec = grid_search_min(1, 0.01, 0.0)
    assert (value is None) == (spec is None)
