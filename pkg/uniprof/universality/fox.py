"""Cliques and anticliques in small random induced subgraphs.

A random set of ``m = ceil(2**(k/4))`` vertices spans in expectation at
most ``m**k * 2 * (p(K_k) + p(co-K_k))`` k-cliques and k-anticliques,
where ``p`` are the densities in the host graph.
"""

import logging
import math
import numbers
from dataclasses import dataclass

import numpy as np
from sklearn.utils import check_scalar

from ..base import complement, induce, is_graph
from ..exceptions import InputError
from ..profiles import count_k_cliques
from ..profiles.counts import clique_work
from .._config import get_config
from ..utils.random import philox_stream
from ..utils.validation import check_seed

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FoxSample:
    """One sampled vertex set and its k-clique and k-anticlique counts."""
    k: int
    m: int
    vertices: tuple
    cliques: int
    anticliques: int

    @property
    def total(self):
        return self.cliques + self.anticliques


@dataclass(frozen=True)
class FoxTrials:
    """Repeated samples with the expectation bound.

    ``bound_exact`` is False when the k-clique densities of the host graph
    were too expensive and the random-graph value ``2**-C(k,2)`` was used
    for each.
    """
    k: int
    m: int
    seed: int
    totals: tuple
    bound: float
    bound_exact: bool

    @property
    def trials(self):
        return len(self.totals)

    @property
    def mean(self):
        return float(np.mean(self.totals))


def sample_size(k):
    return math.ceil(2 ** (k / 4))


def _check(g, k):
    if not is_graph(g):
        raise InputError("expected a Graph")
    k = int(check_scalar(k, "k", numbers.Integral, min_val=4))
    m = sample_size(k)
    if m > g.n:
        raise InputError(f"sample size m={m} exceeds n={g.n}")
    return k, m


def _sample(g, k, m, rng):
    vertices = np.sort(rng.choice(g.n, size=m, replace=False))
    if m < k:
        return FoxSample(k, m, tuple(vertices.tolist()), 0, 0)
    h = induce(g, vertices)
    return FoxSample(k, m, tuple(vertices.tolist()), count_k_cliques(h, k),
                     count_k_cliques(complement(h), k))


def fox_sample(g, k, seed):
    """Sample ``m = ceil(2**(k/4))`` vertices and count k-(anti)cliques.

    Parameters
    ----------
    g : Graph

    k : int
        Clique order, at least 4.

    seed : int

    Returns
    -------
    sample : FoxSample
    """
    k, m = _check(g, k)
    return _sample(g, k, m, philox_stream(check_seed(seed), 0))


def clique_density_bound(g, k, m):
    """``m**k * 2 * (p(K_k) + p(co-K_k))`` and whether it is exact."""
    cap = get_config()["work_cap"]
    co = complement(g)
    if max(clique_work(g, k), clique_work(co, k)) <= cap:
        density = ((count_k_cliques(g, k) + count_k_cliques(co, k))
                   / math.comb(g.n, k))
        exact = True
    else:
        density = 2.0 ** (1 - math.comb(k, 2))
        exact = False
    return float(m) ** k * 2 * density, exact


def fox_trials(g, k, trials, seed):
    """Repeat :func:`fox_sample`; trial ``i`` uses stream ``i`` of ``seed``.

    Returns
    -------
    result : FoxTrials
    """
    k, m = _check(g, k)
    trials = int(check_scalar(trials, "trials", numbers.Integral, min_val=1))
    seed = check_seed(seed)
    totals = tuple(_sample(g, k, m, philox_stream(seed, i)).total
                   for i in range(trials))
    bound, exact = clique_density_bound(g, k, m)
    logger.info("fox k=%d m=%d: mean %.4g over %d trials, bound %.3g%s", k,
                m, float(np.mean(totals)), trials, bound,
                "" if exact else " (random-graph baseline)")
    return FoxTrials(k, m, seed, totals, bound, exact)
