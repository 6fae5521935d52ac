"""
The :mod:`uniprof.profiles` module counts induced 3- and 4-vertex types
exactly, enumerates small profiles and estimates larger ones by sampling.
"""

from ._types import Profile3, TournamentProfile4, ArcCycleCounts
from ._types import ProfileEstimate
from .counts import triangle_count, profile3_graph, cyclic_triangle_count
from .counts import arc_cycle_counts, profile4_tournament, count_k_cliques
from .counts import class_counts
from .exhaustive import profile_exhaustive
from .sampling import profile_montecarlo

__all__ = ["Profile3", "TournamentProfile4", "ArcCycleCounts",
           "ProfileEstimate", "triangle_count", "profile3_graph",
           "cyclic_triangle_count", "arc_cycle_counts",
           "profile4_tournament", "count_k_cliques", "class_counts",
           "profile_exhaustive", "profile_montecarlo"]
