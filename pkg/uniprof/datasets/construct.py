"""Named constructions, ``name:arg1:arg2``.

==================  ===============================  ==========
name                arguments                        result
==================  ===============================  ==========
circular            n (odd)                          tournament
transitive          n                                tournament
random-tournament   n, seed                          tournament
tyomkyn             k                                graph
extremal-rho        n                                graph
clique-union        a1,a2,...[;beta], n              graph
random-graph        n, p, seed                       graph
==================  ===============================  ==========

The JSON form ``{"name": "circular", "args": [1001]}`` describes the same
constructions; ``clique-union`` takes ``{"alphas": [...], "beta": b,
"n": n}`` as well.
"""

import json
import logging
from pathlib import Path

from ..base import CliqueSpec
from ..constructions import (circular_tournament, transitive_tournament,
                             random_tournament, tyomkyn_graph,
                             extremal_rho_graph, clique_union, random_graph)
from ..exceptions import InputError

logger = logging.getLogger(__name__)

__all__ = ["CONSTRUCTIONS", "parse_construction", "build", "load_spec"]


def _int(value, name):
    try:
        return int(value)
    except (TypeError, ValueError):
        raise InputError(f"{name} must be an integer, got {value!r}")


def _float(value, name):
    try:
        return float(value)
    except (TypeError, ValueError):
        raise InputError(f"{name} must be a number, got {value!r}")


def _clique_spec(sizes, beta=None):
    if isinstance(sizes, str):
        sizes, _, beta_text = sizes.partition(";")
        sizes = [s for s in sizes.split(",") if s]
        beta = beta_text or None
    alphas = [_float(a, "clique size") for a in sizes]
    beta = None if beta is None else _float(beta, "beta")
    return CliqueSpec(alphas, beta)


def _circular(n):
    return circular_tournament(_int(n, "n"))


def _transitive(n):
    return transitive_tournament(_int(n, "n"))


def _random_tournament(n, seed):
    return random_tournament(_int(n, "n"), _int(seed, "seed"))


def _tyomkyn(k):
    return tyomkyn_graph(_int(k, "k"))


def _extremal_rho(n):
    return extremal_rho_graph(_int(n, "n"))


def _clique_union(sizes, n, beta=None):
    return clique_union(_clique_spec(sizes, beta), _int(n, "n"))


def _random_graph(n, p, seed):
    return random_graph(_int(n, "n"), _float(p, "p"), _int(seed, "seed"))


CONSTRUCTIONS = {
    "circular": (_circular, "tournament"),
    "transitive": (_transitive, "tournament"),
    "random-tournament": (_random_tournament, "tournament"),
    "tyomkyn": (_tyomkyn, "graph"),
    "extremal-rho": (_extremal_rho, "graph"),
    "clique-union": (_clique_union, "graph"),
    "random-graph": (_random_graph, "graph"),
}


def parse_construction(text):
    """Split ``name:arg1:arg2`` into the name and its arguments."""
    name, *args = text.strip().split(":")
    if name not in CONSTRUCTIONS:
        raise InputError(f"unknown construction {name!r}; expected one of "
                         f"{', '.join(CONSTRUCTIONS)}")
    return name, args


def build(name, args=(), kwargs=None):
    """Build a named construction.

    Returns
    -------
    obj : Graph or Tournament
    """
    if name not in CONSTRUCTIONS:
        raise InputError(f"unknown construction {name!r}")
    func, _ = CONSTRUCTIONS[name]
    try:
        obj = func(*args, **(kwargs or {}))
    except TypeError:
        raise InputError(f"wrong arguments for {name}: {list(args)}")
    logger.info("built %s%s: %r", name, "".join(f":{a}" for a in args), obj)
    return obj


def load_spec(path):
    """Read a JSON construction description; returns (name, args, kwargs).
    """
    try:
        data = json.loads(Path(path).read_text())
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}")
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON: {e.msg}", line=e.lineno)
    if not isinstance(data, dict) or "name" not in data:
        raise InputError("a construction spec is an object with a 'name'")
    name = data["name"]
    args = data.get("args", [])
    kwargs = {k: v for k, v in data.items() if k not in ("name", "args")}
    if name == "clique-union" and "alphas" in kwargs:
        kwargs["sizes"] = kwargs.pop("alphas")
    return name, list(args), kwargs
