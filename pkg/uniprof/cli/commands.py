"""Subcommands.

Each command takes the parsed arguments and returns ``(report, lines,
status)``: the :class:`RunReport`, the human-readable output and the
exit status.  Errors propagate as exceptions and are mapped to exit codes
by :func:`uniprof.cli.main.main`.
"""

import logging
import math
import time
from math import comb

import numpy as np

from ..base import is_graph, is_tournament
from ..constructions import tyomkyn_level
from ..datasets import build, parse_construction, load_spec, read_object
from ..datasets import file_sha256
from ..exceptions import InputError, VerificationError
from ..extremal import (solve_cubic_theta, enumerate_cases, minimum_case,
                        compare_reference, grid_search_min, goodman_slack,
                        goodman_floor_slack)
from ..inequalities import run_suite, verify_tournament_inequalities
from ..profiles import (class_counts, profile_exhaustive,
                        profile_montecarlo, profile3_graph,
                        profile4_tournament)
from ..universality import (is_l_universal, find_induced_path5,
                            max_transitive, fox_trials)
from .report import RunReport, input_info, counts_to_json, write_csv
from .report import csv_text

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2
EXIT_REFUSED = 3
EXIT_NOT_UNIVERSAL = 4


def load_input(args):
    """Resolve ``--input``, ``--construct`` or ``--spec`` to an object and
    its report entry."""
    given = [x for x in (args.input, args.construct, args.spec)
             if x is not None]
    if len(given) != 1:
        raise InputError("give exactly one of --input, --construct, --spec")
    if args.input is not None:
        obj = read_object(args.input)
        info = input_info(obj, "file", str(args.input),
                          file_digest=file_sha256(args.input))
    elif args.construct is not None:
        name, params = parse_construction(args.construct)
        obj = build(name, params)
        info = input_info(obj, "construct", args.construct)
    else:
        name, params, kwargs = load_spec(args.spec)
        obj = build(name, params, kwargs)
        info = input_info(obj, "spec", str(args.spec))
    if args.kind is not None and args.kind != obj.kind:
        raise InputError(f"--kind {args.kind} given but the input is a "
                         f"{obj.kind}")
    return obj, info


def _fmt_count(x):
    return f"{int(x):>14d}"


def cmd_profile(args):
    started = time.perf_counter()
    obj, info = load_input(args)
    l = args.l if args.l is not None else (3 if is_graph(obj) else 4)
    results = {"l": l, "mode": args.mode}
    lines = [f"{obj!r}, l={l}, mode={args.mode}"]
    seed = None
    if args.mode == "sampled":
        if args.samples is None:
            raise InputError("--mode sampled needs --samples")
        seed = args.seed
        est = profile_montecarlo(obj, l, args.samples, seed)
        results["samples"] = est.samples
        results["classes"] = [
            {"name": c.name, "count": str(int(x)), "density": float(p),
             "half_width": float(h)}
            for c, x, p, h in zip(est.classes, est.counts, est.densities,
                                  est.half_widths)]
        for row in results["classes"]:
            lines.append(f"{row['name']:>12s} {row['density']:.6f} "
                         f"+- {row['half_width']:.6f}")
    else:
        counts = class_counts(obj, l)
        if args.oracle:
            oracle = profile_exhaustive(obj, l)
            if oracle != counts:
                diff = [c.name for c in counts if counts[c] != oracle[c]]
                raise VerificationError(f"exhaustive enumeration disagrees "
                                        f"on {', '.join(diff)}")
            results["oracle"] = "match"
        total = comb(obj.n, l)
        results["total"] = str(total)
        results["counts"] = counts_to_json(counts)
        results["densities"] = {c.name: x / total for c, x in counts.items()}
        for c, x in counts.items():
            lines.append(f"{c.name:>12s} {_fmt_count(x)} {x / total:.6f}")
        if args.oracle:
            lines.append("oracle: exhaustive enumeration matches")
    report = RunReport("profile", info, seed, results, started)
    return report, lines, EXIT_OK


def _case_row(sol):
    row = {"case": sol.label, "feasible": sol.feasible, "value": sol.value,
           "unknown": sol.unknown_name, "unknown_value": sol.unknown,
           "is_bound": sol.is_bound, "note": sol.note}
    cmp = compare_reference(sol)
    if cmp is not None:
        ref = cmp["reference"]
        row["reference_unknown"] = ref.unknown
        row["reference_value"] = ref.value
        row["reference_ok"] = cmp["ok"]
    return row, cmp


def _decimals(x, places=6):
    """Format ``x`` truncated, not rounded, to ``places`` decimals."""
    scale = 10 ** places
    return f"{math.floor(x * scale + 1e-9) / scale:.{places}f}"


def _short_label(case):
    if case.kind == "interior":
        return f"r={case.r}"
    return f"s={case.s},t={case.t}"


def cmd_solve_extremal(args):
    started = time.perf_counter()
    const = solve_cubic_theta()
    results = {"theta": const.theta, "rho": const.rho,
               "residual": const.residual}
    lines = [f"theta = {const.theta:.10f}", f"rho   = {const.rho:.10f}"]
    failed = []
    if args.cases or not args.grid:
        solutions = enumerate_cases()
        rows = []
        lines.append(f"{'case':<22s} {'value':>10s} {'reference':>10s} ok")
        for sol in solutions:
            row, cmp = _case_row(sol)
            rows.append(row)
            value = "infeasible" if not sol.feasible else (
                ">=" + _decimals(sol.value) if sol.is_bound
                else _decimals(sol.value))
            ref = "" if cmp is None else _decimals(cmp["reference"].value)
            ok = "" if cmp is None else ("yes" if cmp["ok"] else "NO")
            lines.append(f"{sol.label:<22s} {value:>10s} {ref:>10s} {ok}")
            if cmp is not None and not cmp["ok"]:
                failed.append(sol.label)
        best = minimum_case(solutions)
        results["cases"] = rows
        results["minimum"] = {"case": best.label, "value": best.value}
        lines.append(f"min = {_decimals(best.value)} @ "
                     f"{_short_label(best.case)}")
        if best.case.kind != "boundary" or (best.case.s, best.case.t) != (2, 1):
            failed.append("minimum")
    if args.grid:
        value, spec = grid_search_min(args.r, args.step, args.band)
        grid = {"r_max": args.r, "step": args.step, "band": args.band,
                "value": value}
        if value is None:
            lines.append("grid: no point within the band")
            failed.append("grid")
        else:
            grid["alphas"] = list(spec.alphas)
            grid["beta"] = spec.beta
            lines.append(f"grid min = {value:.6f} at alphas "
                         f"{', '.join(f'{a:.4f}' for a in spec.alphas)}")
            if abs(value - const.rho) > args.step:
                failed.append("grid")
        results["grid"] = grid
    results["failed"] = failed
    report = RunReport("solve-extremal", None, None, results, started)
    status = EXIT_OK
    if failed:
        lines.append(f"deviations: {', '.join(failed)}")
        status = EXIT_VERIFY
    return report, lines, status


def cmd_verify(args):
    started = time.perf_counter()
    obj, info = load_input(args)
    checks = run_suite(obj, args.suite)
    rows = [{"name": c.name, "description": c.description,
             "lhs": str(c.lhs), "bound": str(c.bound), "slack": c.slack,
             "passed": c.passed, "tight": c.tight, **c.details}
            for c in checks]
    lines = [f"{obj!r}, suite {args.suite}"]
    for c in checks:
        state = "pass" if c.passed else "FAIL"
        if c.tight and not c.identity:
            state += " (tight)"
        lines.append(f"({c.name}) {c.description:<32s} slack "
                     f"{c.slack:+.6g} {state}")
        lines.extend(f"    {key} = {value:+.6f}"
                     for key, value in c.details.items())
    report = RunReport("verify", info, None,
                       {"suite": args.suite, "checks": rows}, started)
    status = EXIT_OK if all(c.passed for c in checks) else EXIT_VERIFY
    return report, lines, status


def cmd_universal(args):
    started = time.perf_counter()
    obj, info = load_input(args)
    rep = is_l_universal(obj, args.l, mode=args.mode, samples=args.samples,
                         seed=args.seed)
    missing = [c.name for c in rep.missing]
    results = {"l": rep.l, "mode": rep.mode, "universal": rep.universal,
               "missing": missing, "unseen": rep.unseen,
               "counts": counts_to_json(rep.counts), "total": str(rep.total)}
    if rep.universal:
        lines = [f"{obj!r} is {rep.l}-universal"]
    elif rep.universal is None:
        lines = [f"undetermined: {rep.unseen} classes not seen in "
                 f"{rep.samples} samples"]
    else:
        lines = [f"not {rep.l}-universal; missing {', '.join(missing)}"]
    if args.witness == "p5":
        if not is_graph(obj):
            raise InputError("--witness p5 needs a graph")
        path = find_induced_path5(obj)
        results["induced_p5"] = None if path is None else list(path)
        lines.append("no induced P5" if path is None else
                     f"induced P5: {'-'.join(map(str, path))}")
    elif args.witness == "transitive":
        if not is_tournament(obj):
            raise InputError("--witness transitive needs a tournament")
        tr = max_transitive(obj)
        results["max_transitive"] = tr
        lines.append(f"largest transitive subtournament: {tr}")
    seed = args.seed if rep.sampled else None
    report = RunReport("universal", info, seed, results, started)
    status = EXIT_NOT_UNIVERSAL if rep.universal is False else EXIT_OK
    return report, lines, status


GRAPH_COLUMNS = ["param", "n", "p0", "p1", "p2", "p3", "goodman_slack",
                 "floor_slack"]
TOURNAMENT_COLUMNS = ["param", "n", "t4", "c4", "w4", "l4", "c3", "slack_a",
                      "slack_b", "slack_c", "slack_d", "slack_e"]
SWEEP_FAMILIES = ("circular", "transitive", "tyomkyn", "extremal-rho",
                  "random-graph", "random-tournament")


def _sweep_params(family, x, args):
    if family == "random-graph":
        return [x, args.p, args.seed]
    if family == "random-tournament":
        return [x, args.seed]
    return [x]


def _sweep_row(obj, x):
    if is_graph(obj):
        p = profile3_graph(obj)
        return [x, obj.n, *p.densities, goodman_slack(p),
                goodman_floor_slack(obj.n)]
    p = profile4_tournament(obj)
    checks = verify_tournament_inequalities(obj, profile=p)
    return [x, obj.n, *p.densities4, p.density_c3,
            *(c.slack for c in checks)]


def cmd_sweep(args):
    started = time.perf_counter()
    family = args.family
    if family == "random-graph" and args.p is None:
        raise InputError("the random-graph family needs --p")
    if args.step < 1:
        raise InputError(f"--step must be positive, got {args.step}")
    values = list(range(args.start, args.stop + 1, args.step))
    kind = "tournament" if family in ("circular", "transitive",
                                      "random-tournament") else "graph"
    columns = TOURNAMENT_COLUMNS if kind == "tournament" else GRAPH_COLUMNS
    param = "k" if family == "tyomkyn" else "n"
    header = [f"uniprof {family} sweep, {param} = {args.start}.."
              f"{args.stop} step {args.step}",
              f"param is {param}; densities of induced "
              + ("4-vertex tournaments and cyclic triangles"
                 if kind == "tournament" else "3-vertex graphs"),
              "slack columns are lhs minus bound in densities"]
    if kind == "graph":
        header.append("floor_slack is the least goodman_slack possible "
                      "at this n")
    rows = []
    for x in values:
        obj = build(family, _sweep_params(family, x, args))
        rows.append(_sweep_row(obj, x))
        logger.info("sweep %s=%d done", param, x)
    if family == "tyomkyn":
        for row in rows:
            if abs(row[5] - tyomkyn_level(row[0]).p3) > 1e-12:
                raise VerificationError(f"k={row[0]}: p3 differs from the "
                                        f"level recurrence")
    if args.output is not None:
        write_csv(args.output, header, columns, rows)
        lines = [f"wrote {len(rows)} rows to {args.output}"]
    else:
        lines = csv_text(header, columns, rows).splitlines()
    results = {"family": family, "columns": columns,
               "rows": [[str(v) if isinstance(v, (int, np.integer)) else v
                         for v in row] for row in rows]}
    seed = args.seed if family.startswith("random") else None
    report = RunReport("sweep", None, seed, results, started)
    return report, lines, EXIT_OK


def cmd_fox(args):
    started = time.perf_counter()
    obj, info = load_input(args)
    res = fox_trials(obj, args.k, args.trials, args.seed)
    results = {"k": res.k, "m": res.m, "trials": res.trials,
               "totals": [str(x) for x in res.totals], "mean": res.mean,
               "bound": res.bound, "bound_exact": res.bound_exact}
    lines = [f"k={res.k}, m={res.m}: mean {res.mean:.4g} cliques and "
             f"anticliques over {res.trials} trials",
             f"expectation bound {res.bound:.4g}"
             + ("" if res.bound_exact else " (random-graph baseline)")]
    report = RunReport("fox", info, args.seed, results, started)
    return report, lines, EXIT_OK


COMMANDS = {
    "profile": cmd_profile,
    "solve-extremal": cmd_solve_extremal,
    "verify": cmd_verify,
    "universal": cmd_universal,
    "sweep": cmd_sweep,
    "fox": cmd_fox,
}
