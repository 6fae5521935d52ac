"""
The :mod:`uniprof.extremal` module computes the threshold constants,
solves the critical cases of clique unions with equal clique and
independent-triple densities, and checks them against a grid search.
"""

from .theta import ExtremalConstants, solve_cubic_theta
from .densities import clique_union_densities, goodman_slack
from .densities import goodman_floor, goodman_floor_slack
from .cases import CaseSpec, CaseSolution, REFERENCE, CASES
from .cases import solve_case, enumerate_cases, minimum_case
from .cases import compare_reference
from .grid import grid_search_min

__all__ = ["ExtremalConstants", "solve_cubic_theta",
           "clique_union_densities", "goodman_slack", "goodman_floor",
           "goodman_floor_slack",
           "CaseSpec", "CaseSolution", "REFERENCE",
           "CASES", "solve_case", "enumerate_cases", "minimum_case",
           "compare_reference", "grid_search_min"]
