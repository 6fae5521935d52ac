"""Text formats for graphs and tournaments.

A file starts with ``graph <n>`` or ``tournament <n>``.  Graph files list
one edge ``u v`` per line.  Tournament files list one arc ``u v``
(meaning u -> v) per line for all C(n, 2) pairs, or the word ``matrix``
followed by n lines of n characters in {0, 1}, row v column u set iff
v -> u.  Vertices are 0-based.  Blank lines and lines starting with
``#`` are ignored.
"""

import hashlib
import logging
from pathlib import Path

import numpy as np

from ..base import Tournament, graph_from_edges, tournament_from_arcs
from ..base import is_graph, is_tournament
from ..exceptions import InputError
from ..utils.bitset import pack_rows
from ..utils.validation import check_n_vertices

logger = logging.getLogger(__name__)

__all__ = ["read_object", "parse_object", "write_object", "format_object",
           "file_sha256"]


def file_sha256(path):
    """Calculate the sha256 hash of the file at path."""
    sha256hash = hashlib.sha256()
    chunk_size = 8192
    with open(path, "rb") as f:
        while True:
            buffer = f.read(chunk_size)
            if not buffer:
                break
            sha256hash.update(buffer)
    return sha256hash.hexdigest()


def _lines(text):
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line and not line.startswith("#"):
            yield number, line


def _header(lines):
    try:
        number, line = next(lines)
    except StopIteration:
        raise InputError("empty input", line=1)
    fields = line.split()
    if len(fields) != 2 or fields[0] not in ("graph", "tournament"):
        raise InputError(f"expected 'graph <n>' or 'tournament <n>', "
                         f"got {line!r}", line=number)
    try:
        n = int(fields[1])
    except ValueError:
        raise InputError(f"vertex count {fields[1]!r} is not an integer",
                         line=number)
    if n < 1:
        raise InputError(f"vertex count must be positive, got {n}",
                         line=number)
    return fields[0], check_n_vertices(n), number


def _pairs(first, lines, n, what):
    pairs, numbers = [], []
    for number, line in ([first] if first else []) + list(lines):
        fields = line.split()
        try:
            u, v = (int(x) for x in fields)
        except ValueError:
            raise InputError(f"expected '<u> <v>', got {line!r}", line=number)
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"{what} ({u}, {v}) has a vertex outside "
                             f"0..{n - 1}", line=number, pair=(u, v))
        if u == v:
            raise InputError(f"{what} ({u}, {v}) is a self-loop",
                             line=number, pair=(u, v))
        pairs.append((u, v))
        numbers.append(number)
    return pairs, numbers


def _matrix(lines, n):
    rows = []
    for v in range(n):
        try:
            number, line = next(lines)
        except StopIteration:
            raise InputError(f"matrix has {v} rows, expected {n}")
        if len(line) != n or set(line) - {"0", "1"}:
            raise InputError(f"matrix row {v} must be {n} characters in "
                             f"{{0,1}}", line=number)
        rows.append((number, np.frombuffer(line.encode(), np.uint8) == 49))
    extra = next(lines, None)
    if extra is not None:
        raise InputError("trailing data after the matrix", line=extra[0])
    dense = np.array([r for _, r in rows]).reshape(n, n)
    bad = np.argwhere(np.triu(dense == dense.T, k=1) |
                      np.diag(np.diag(dense)))
    if bad.size:
        v, u = (int(x) for x in bad[0])
        what = "self-loop" if u == v else (
            "both orientations" if dense[v, u] else "no arc")
        raise InputError(f"pair ({v}, {u}): {what}", line=rows[v][0],
                         pair=(v, u))
    return Tournament(n, pack_rows(dense))


def parse_object(text):
    """Parse a graph or tournament from its text form.

    Errors raise :class:`InputError` with the 1-based ``line`` set.
    """
    lines = _lines(text)
    kind, n, _ = _header(lines)
    if kind == "graph":
        pairs, _ = _pairs(None, lines, n, "edge")
        obj = graph_from_edges(n, pairs)
    else:
        first = next(lines, None)
        if first is not None and first[1] == "matrix":
            obj = _matrix(lines, n)
        else:
            pairs, numbers = _pairs(first, lines, n, "arc")
            try:
                obj = tournament_from_arcs(n, pairs)
            except InputError as e:
                line = numbers[e.index] if e.index is not None else None
                raise InputError(str(e), line=line, index=e.index,
                                 pair=e.pair) from None
    logger.debug("parsed %r", obj)
    return obj


def read_object(path):
    """Read a graph or tournament file."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}")
    return parse_object(text)


def format_object(obj, matrix=False):
    """Text form of a graph or tournament; tournaments optionally as a
    matrix."""
    if is_graph(obj):
        lines = [f"graph {obj.n}"]
        lines += [f"{u} {v}" for u, v in obj.edges().tolist()]
    elif is_tournament(obj):
        lines = [f"tournament {obj.n}"]
        dense = obj.to_dense()
        if matrix:
            lines.append("matrix")
            lines += ["".join("1" if b else "0" for b in row)
                      for row in dense]
        else:
            lines += [f"{u} {v}" for u, v in obj.arcs().tolist()]
    else:
        raise InputError("expected a Graph or a Tournament")
    return "\n".join(lines) + "\n"


def write_object(obj, path, matrix=False):
    """Write ``obj`` in the format :func:`read_object` reads."""
    with open(path, "w", newline="\n") as f:
        f.write(format_object(obj, matrix=matrix))
