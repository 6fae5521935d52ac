"""
The :mod:`uniprof.universality` module decides l-universality and hosts
the searches around it: induced five-vertex paths, largest transitive
subtournaments and clique sampling.
"""

from ..classes import canonical_class, enumerate_classes
from .universal import UniversalityReport, is_l_universal
from .paths import find_induced_path5
from .transitive import max_transitive, transitive_lower_bound
from .fox import FoxSample, FoxTrials, fox_sample, fox_trials

__all__ = ["canonical_class", "enumerate_classes", "UniversalityReport",
           "is_l_universal", "find_induced_path5", "max_transitive",
           "transitive_lower_bound", "FoxSample", "FoxTrials", "fox_sample",
           "fox_trials"]
