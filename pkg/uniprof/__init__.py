"""
Exact local profiles, universality tests and extremal constants for
graphs and tournaments.
"""

__version__ = "0.1"

from ._config import get_config, set_config, config_context
from .base import Graph, Tournament, CliqueSpec
from .base import graph_from_edges, tournament_from_arcs
from .base import complement, reverse, induce

__all__ = ["Graph", "Tournament", "CliqueSpec", "graph_from_edges",
           "tournament_from_arcs", "complement", "reverse", "induce",
           "get_config", "set_config", "config_context", "__version__"]
