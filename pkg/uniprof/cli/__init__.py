"""
The :mod:`uniprof.cli` module implements the ``uniprof`` command.
"""

from .main import main, build_parser

__all__ = ["main", "build_parser"]
