"""Entry point of the ``uniprof`` command."""

import argparse
import logging
import sys

from .. import __version__
from .._config import config_context
from ..exceptions import InputError, VerificationError, WorkCapExceeded
from .commands import (COMMANDS, SWEEP_FAMILIES, EXIT_OK, EXIT_INPUT,
                       EXIT_VERIFY, EXIT_REFUSED)
from .report import to_json

logger = logging.getLogger(__name__)


def _add_input(p, kind=True):
    group = p.add_argument_group("input")
    group.add_argument("--input", metavar="FILE",
                       help="graph or tournament file")
    group.add_argument("--construct", metavar="NAME:ARGS",
                       help="named construction, e.g. circular:1001")
    group.add_argument("--spec", metavar="FILE.json",
                       help="construction described in JSON")
    if kind:
        group.add_argument("--kind", choices=("graph", "tournament"),
                           help="expected kind of the input")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="uniprof",
        description="Local profiles, universality and extremal constants "
                    "of graphs and tournaments.")
    parser.add_argument("--version", action="version",
                        version=f"uniprof {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for progress, -vv for details")
    common.add_argument("--threads", type=int, default=1,
                        help="worker threads (default 1)")
    common.add_argument("--json", action="store_true",
                        help="print the JSON report instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", parents=[common],
                       help="count induced l-vertex classes")
    _add_input(p)
    p.add_argument("--l", type=int, default=None,
                   help="order (default 3 for graphs, 4 for tournaments)")
    p.add_argument("--mode", choices=("exact", "sampled"), default="exact")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle", action="store_true",
                   help="compare with exhaustive enumeration")

    p = sub.add_parser("solve-extremal", parents=[common],
                       help="threshold constants and the case table")
    p.add_argument("--cases", action="store_true",
                   help="solve every case (default)")
    p.add_argument("--grid", action="store_true",
                   help="grid search over clique unions")
    p.add_argument("--r", type=int, default=3, help="largest clique count")
    p.add_argument("--step", type=float, default=0.005)
    p.add_argument("--band", type=float, default=0.01)

    p = sub.add_parser("verify", parents=[common],
                       help="check inequalities and identities")
    _add_input(p)
    p.add_argument("--suite", required=True,
                   choices=("goodman", "tournament-inequalities",
                            "identities"))

    p = sub.add_parser("universal", parents=[common],
                       help="decide l-universality")
    _add_input(p)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "sampled"),
                   default="exhaustive")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--witness", choices=("p5", "transitive"))

    p = sub.add_parser("sweep", parents=[common],
                       help="profiles along a family, as CSV")
    p.add_argument("--family", required=True, choices=SWEEP_FAMILIES)
    p.add_argument("--start", type=int, required=True)
    p.add_argument("--stop", type=int, required=True)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--p", type=float, help="edge probability")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", metavar="FILE.csv")

    p = sub.add_parser("fox", parents=[common],
                       help="cliques in random induced subgraphs")
    _add_input(p, kind=False)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(kind=None)
    return parser


def _configure_logging(verbose):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv=None):
    """Run one command; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    _configure_logging(args.verbose)
    try:
        with config_context(n_jobs=max(1, args.threads)):
            report, lines, status = COMMANDS[args.command](args)
    except WorkCapExceeded as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_REFUSED
    except VerificationError as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except (InputError, ValueError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        print(to_json(report))
    else:
        print("\n".join(lines))
    logger.info("%s finished with status %d", args.command, status)
    return status


if __name__ == "__main__":
    sys.exit(main())
