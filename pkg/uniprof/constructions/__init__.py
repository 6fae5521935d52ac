"""
The :mod:`uniprof.constructions` module builds clique unions, circular,
transitive and random tournaments, random graphs and the recursive
pentagon blow-ups.
"""

from .cliques import apportion, clique_sizes, clique_union
from .cliques import extremal_rho_graph
from .tournaments import circular_tournament, transitive_tournament
from .tournaments import random_tournament
from .random import random_graph
from .tyomkyn import TyomkynLevel, tyomkyn_level, tyomkyn_graph

__all__ = ["apportion", "clique_sizes", "clique_union", "extremal_rho_graph",
           "circular_tournament", "transitive_tournament",
           "random_tournament", "random_graph", "TyomkynLevel",
           "tyomkyn_level", "tyomkyn_graph"]
