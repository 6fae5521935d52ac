"""
The :mod:`uniprof.datasets` module reads and writes graphs and tournaments
and builds named constructions.
"""

from .io import read_object, parse_object, write_object, format_object
from .io import file_sha256
from .construct import CONSTRUCTIONS, parse_construction, build, load_spec

__all__ = ["read_object", "parse_object", "write_object", "format_object",
           "file_sha256", "CONSTRUCTIONS", "parse_construction", "build",
           "load_spec"]
