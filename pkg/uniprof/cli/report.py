"""Run reports and CSV tables.

A report is a JSON object with the keys ``command``, ``input``, ``seed``,
``results`` and ``meta``.  Integer counts are written as decimal strings,
floats in their shortest round-trip form.  Only ``meta.wall_time`` varies
between identical runs.
"""

import csv
import io
import json
import time

from sklearn.utils import Bunch

from .. import __version__

__all__ = ["RunReport", "input_info", "counts_to_json", "to_json",
           "write_csv"]


class RunReport(Bunch):
    """Report of one command; keys are accessible as attributes."""

    def __init__(self, command, input=None, seed=None, results=None,
                 started=None):
        wall = None if started is None else time.perf_counter() - started
        super().__init__(command=command, input=input, seed=seed,
                         results={} if results is None else results,
                         meta={"version": __version__, "wall_time": wall})


def input_info(obj, source, name, file_digest=None):
    info = {"source": source, "name": name, "kind": obj.kind, "n": obj.n,
            "digest": obj.digest()}
    if file_digest is not None:
        info["file_sha256"] = file_digest
    return info


def counts_to_json(counts):
    """Counts as decimal strings, keys as class names."""
    return {str(k): str(int(v)) for k, v in counts.items()}


def to_json(report, indent=2):
    return json.dumps(dict(report), indent=indent, sort_keys=False)


def write_csv(out, header, columns, rows):
    """Write a ``,``-separated table with LF line endings.

    ``header`` lines are written first as ``#`` comments.  ``out`` is a
    path or a text stream.
    """
    if isinstance(out, (str, bytes)) or hasattr(out, "__fspath__"):
        with open(out, "w", newline="") as f:
            return write_csv(f, header, columns, rows)
    for line in header:
        out.write(f"# {line}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([repr(float(x)) if isinstance(x, float) else x
                         for x in row])


def csv_text(header, columns, rows):
    buf = io.StringIO()
    write_csv(buf, header, columns, rows)
    return buf.getvalue()
