"""
The :mod:`uniprof.utils` module includes various utilities.
"""

from .validation import check_n_vertices, check_work, check_seed
from .validation import check_order, check_vertex_list
from .random import philox_stream
from .parallel import map_ranges, sum_ranges

__all__ = ["check_n_vertices", "check_work", "check_seed", "check_order",
           "check_vertex_list", "philox_stream", "map_ranges", "sum_ranges"]
