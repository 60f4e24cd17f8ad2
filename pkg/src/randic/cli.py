"""Command-line interface.

Subcommands: compute, bounds, construct, enumerate, verify.  Graphs are read
from a file or stdin ("-") in edge-list or graph6 format; graph6 input is
streamed one graph per line so the tool composes in shell pipelines.

Exit codes: 0 success, 2 usage or input error, 3 bound violation found
(a counterexample to a verified theorem -- never expected).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Iterator

from .bounds import SLACK_TOLERANCE, bounds_report
from .constructions import build_biregular, build_degree_chain, degree_chain_certificate
from .enumeration import (CSV_COLUMNS, MAX_VERTICES, extremal_scan, verify_theorems)
from .graphs import (Graph, GraphFormatError, biregular_certificate,
                     degree_multiset, format_edge_list, parse_edge_list,
                     parse_graph6, to_graph6)
from .index import IDENTITY_TOLERANCE, randic_direct, randic_deviation

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VIOLATION = 3


def _fmt(x: float) -> str:
    return format(x, ".15g")


def _json_ready(obj):
    """Round floats to 15 significant digits so JSON output is stable."""
    if isinstance(obj, float):
        return float(_fmt(obj))
    if isinstance(obj, dict):
        return {k: _json_ready(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_ready(v) for v in obj]
    return obj


def _dump_json(obj) -> str:
    return json.dumps(_json_ready(obj), separators=(", ", ": "))


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _read_graphs(path: str, fmt: str) -> Iterator[Graph]:
    """Edge-list input holds a single graph; graph6 input one graph per line."""
    text = _read_text(path)
    if fmt == "edgelist":
        yield parse_edge_list(text)
        return
    for line in text.splitlines():
        if line.strip():
            yield parse_graph6(line)


def _pairs_text(counts: dict[tuple[int, int], int]) -> str:
    return ";".join(f"({i},{j})x{c}" for (i, j), c in sorted(counts.items()))


def cmd_compute(args) -> int:
    writer = None
    for g in _read_graphs(args.input, args.format):
        rv = randic_direct(g)
        dev = randic_deviation(g)
        residual = abs(rv.value - dev)
        if residual > args.tolerance:
            print(f"warning: identity residual {residual:.3g} exceeds "
                  f"tolerance {args.tolerance:.3g}", file=sys.stderr)
        if args.json:
            print(_dump_json({
                "n": g.n, "m": g.m,
                "randic": rv.value, "deviation": dev, "residual": residual,
                "pairs": [[i, j, c] for (i, j), c in sorted(rv.pair_counts.items())],
            }))
        elif args.csv:
            if writer is None:
                writer = csv.writer(sys.stdout, lineterminator="\n")
                writer.writerow(["n", "m", "randic", "deviation", "residual", "pairs"])
            writer.writerow([g.n, g.m, _fmt(rv.value), _fmt(dev),
                             _fmt(residual), _pairs_text(rv.pair_counts)])
        else:
            print(f"n={g.n} m={g.m} randic={_fmt(rv.value)} "
                  f"deviation={_fmt(dev)} residual={_fmt(residual)} "
                  f"pairs={_pairs_text(rv.pair_counts)}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    violation = False
    writer = None
    for g in _read_graphs(args.input, args.format):
        report = bounds_report(g)
        if report.lower_slack < -SLACK_TOLERANCE or (
                report.upper_slack is not None
                and report.upper_slack < -SLACK_TOLERANCE):
            violation = True
            print(f"BOUND VIOLATION on {to_graph6(g)}", file=sys.stderr)
        if args.json:
            print(_dump_json(report.to_json_dict()))
        elif args.csv:
            if writer is None:
                writer = csv.writer(sys.stdout, lineterminator="\n")
                writer.writerow(["n", "d", "D", "randic", "lowerBound",
                                 "upperBound", "baseline", "lowerSlack",
                                 "upperSlack", "regular", "connected",
                                 "lowerEquality", "upperEquality"])
            writer.writerow([
                report.n, report.d, report.D, _fmt(report.randic),
                _fmt(report.lower),
                "" if report.upper is None else _fmt(report.upper),
                _fmt(report.baseline), _fmt(report.lower_slack),
                "" if report.upper_slack is None else _fmt(report.upper_slack),
                int(report.regular), int(report.connected),
                int(report.lower_equality is not None),
                int(report.upper_equality is not None)])
        else:
            upper = ("omitted(disconnected)" if report.upper is None
                     else _fmt(report.upper))
            upper_slack = ("-" if report.upper_slack is None
                           else _fmt(report.upper_slack))
            print(f"n={report.n} d={report.d} D={report.D} "
                  f"randic={_fmt(report.randic)} lower={_fmt(report.lower)} "
                  f"upper={upper} baseline={_fmt(report.baseline)} "
                  f"lowerSlack={_fmt(report.lower_slack)} upperSlack={upper_slack} "
                  f"lowerEquality={'yes' if report.lower_equality else 'no'} "
                  f"upperEquality={'yes' if report.upper_equality else 'no'}"
                  + (" regular" if report.regular else ""))
    return EXIT_VIOLATION if violation else EXIT_OK


def cmd_construct(args) -> int:
    if args.kind == "family":
        if args.scale is not None:
            raise ValueError("--scale applies only to biregular constructions")
        g = build_degree_chain(args.d, args.D)
        cert = degree_chain_certificate(g)
        tight = "upper"
        cert_text = ("chain certificate: cross edges "
                     + ", ".join(f"({u},{v})" for u, v in cert.cross_edges))
    else:
        g = build_biregular(args.d, args.D, 1 if args.scale is None else args.scale)
        cert = biregular_certificate(g)
        tight = "lower"
        cert_text = f"biregular certificate: degrees ({cert.a},{cert.b})"
    value = randic_direct(g).value
    degrees = degree_multiset(g)
    if args.json:
        doc = {
            "kind": args.kind, "d": args.d, "D": args.D,
            "graph6": to_graph6(g), "n": g.n, "m": g.m,
            "degreeMultiset": {str(k): v for k, v in degrees.items()},
            "randic": value, "tight": tight,
        }
        if args.kind == "biregular":
            doc["scale"] = 1 if args.scale is None else args.scale
        print(_dump_json(doc))
        return EXIT_OK
    # graph on stdout, human summary on stderr, so the graph pipes cleanly
    if args.format == "edgelist":
        sys.stdout.write(format_edge_list(g))
    else:
        print(to_graph6(g))
    deg_text = " ".join(f"{k}x{v}" for k, v in degrees.items())
    print(f"n={g.n} m={g.m} degrees {deg_text} randic={_fmt(value)}",
          file=sys.stderr)
    print(f"{tight} bound tight ({cert_text})", file=sys.stderr)
    return EXIT_OK


def _check_cap(n_max: int) -> None:
    if n_max > MAX_VERTICES:
        raise ValueError(
            f"--max-n is capped at {MAX_VERTICES} (exhaustive enumeration only)")
    if n_max == MAX_VERTICES:
        print(f"note: n = {MAX_VERTICES} scans take tens of minutes",
              file=sys.stderr)


def cmd_enumerate(args) -> int:
    _check_cap(args.max_n)
    summaries = extremal_scan(args.max_n, connected_only=args.connected,
                              jobs=args.jobs)
    violations = sum(s.lower_violations + s.upper_violations for s in summaries)
    if args.json:
        for s in summaries:
            print(_dump_json(s.to_json_dict()))
    elif args.csv:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for s in summaries:
            d = s.to_json_dict()
            writer.writerow([
                d["n"], d["d"], d["D"], d["classCount"],
                _fmt(d["minR"]), _fmt(d["maxR"]), d["argmin"], d["argmax"],
                d["lowerViolations"], d["upperViolations"],
                d["lowerEqualityWitnesses"], d["upperEqualityWitnesses"]])
    else:
        print(f"{'n':>2} {'d':>2} {'D':>2} {'count':>8} {'minR':>18} "
              f"{'maxR':>18} {'viol':>5} {'eq(lo/up)':>10}  argmin")
        for s in summaries:
            print(f"{s.n:>2} {s.d:>2} {s.D:>2} {s.class_count:>8} "
                  f"{_fmt(s.min_randic):>18} {_fmt(s.max_randic):>18} "
                  f"{s.lower_violations + s.upper_violations:>5} "
                  f"{s.lower_equality_witnesses:>4}/{s.upper_equality_witnesses:<5} "
                  f"{s.argmin_graph6}")
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_verify(args) -> int:
    _check_cap(args.max_n)
    report = verify_theorems(args.max_n, jobs=args.jobs,
                             identity_tolerance=args.tolerance)
    if args.json:
        print(_dump_json(report.to_json_dict()))
    else:
        for c in report.checks:
            line = f"{c.name:<16} {c.checked:>9} checked {c.failures:>6} failures"
            if c.counterexample:
                line += f"  counterexample {c.counterexample}"
            print(line)
        if report.ok:
            print(f"all theorems verified (n <= {report.max_n}, "
                  f"{report.graphs} graphs)")
        else:
            print("VIOLATIONS FOUND")
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _add_input_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", "-i", default="-", metavar="PATH",
                   help="input file, or '-' for stdin (default)")
    p.add_argument("--format", choices=("edgelist", "graph6"),
                   default="edgelist",
                   help="input format; graph6 reads one graph per line")


def _add_output_options(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true",
                       help="emit JSON (one object per line)")
    group.add_argument("--csv", action="store_true", help="emit CSV")


def _jobs_default() -> int:
    try:
        return max(1, int(os.environ.get("RANDIC_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="randic",
        description="Randic index, sharp degree bounds with certificates, "
                    "extremal constructions, and exhaustive verification")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="index of input graphs, both forms")
    _add_input_options(p)
    _add_output_options(p)
    p.add_argument("--tolerance", type=float, default=IDENTITY_TOLERANCE,
                   help="identity residual tolerance (default %(default)g)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("bounds", help="bounds report with equality certificates")
    _add_input_options(p)
    _add_output_options(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct", help="build an extremal witness graph")
    p.add_argument("kind", choices=("biregular", "family"))
    p.add_argument("d", type=int)
    p.add_argument("D", type=int)
    p.add_argument("--scale", type=int, default=None,
                   help="part-size multiplier (biregular only)")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6",
                   help="output format for the constructed graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("enumerate", help="extremal scan over small graphs")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--connected", action="store_true",
                   help="restrict the scan to connected graphs")
    p.add_argument("--jobs", type=int, default=_jobs_default(),
                   help="worker processes (default $RANDIC_JOBS or 1)")
    _add_output_options(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustively verify every bound and identity")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=_jobs_default(),
                   help="worker processes (default $RANDIC_JOBS or 1)")
    p.add_argument("--tolerance", type=float, default=IDENTITY_TOLERANCE,
                   help="identity residual tolerance (default %(default)g)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
