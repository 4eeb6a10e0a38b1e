"""Command-line front end: construct, compute, enumerate, verify, audit.

Exit status: 0 on success, 1 when any audited inequality fails (a
falsification event), 2 on usage errors or malformed input.  The environment
variable QUADWIENER_THREADS caps the worker count (default: serial).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .audits import VerificationReport, run_audit
from .bounds import conjectured_max
from .construct import FIXTURE_NAMES, build_qn, fixture
from .embed import read_planar_code, write_planar_code
from .enumeration import DEFAULT_LIMIT, enumerate_quadrangulations
from .errors import QuadwienerError
from .metrics import wiener_index

SCHEMA_VERSION = 1


def worker_count() -> int:
    """Serial unless QUADWIENER_THREADS asks for more (capped by the CPU count)."""
    raw = os.environ.get("QUADWIENER_THREADS", "")
    if not raw:
        return 1
    try:
        requested = int(raw)
    except ValueError as exc:
        raise QuadwienerError(f"QUADWIENER_THREADS must be an integer, got {raw!r}") from exc
    return max(1, min(requested, os.cpu_count() or 1))


# -- report serialisation --------------------------------------------------------

_CSV_COLUMNS = (
    "n",
    "code",
    "wiener",
    "conjectured_max",
    "slack",
    "min_degree",
    "separating_cycles",
    "three_connected",
    "degree_structure_ok",
    "connectivity_ok",
    "level_checked",
    "level_failed",
    "cert_total",
    "cert_failed",
    "failures",
)


def report_to_json(report: VerificationReport) -> str:
    payload = {
        "schema_version": SCHEMA_VERSION,
        "kind": report.kind,
        "n_min": report.n_min,
        "n_max": report.n_max,
        "ok": report.ok,
        "summary": report.summary,
        "instances": [
            {
                "n": r.n,
                "code": r.code_hex,
                "wiener": r.wiener,
                "conjectured_max": r.bound,
                "slack": r.slack,
                "min_degree": r.min_degree,
                "separating_cycles": r.separating_cycles,
                "three_connected": r.three_connected,
                "degree_structure_ok": r.degree_structure_ok,
                "connectivity_ok": r.connectivity_ok,
                "level_checked": r.level_checked,
                "level_failed": r.level_failed,
                "cert_total": r.cert_total,
                "cert_failed": r.cert_failed,
                "failures": list(r.failures),
                "certificates": [c.to_dict() for c in r.certificates],
            }
            for r in report.records
        ],
    }
    return json.dumps(payload, indent=2)


def report_to_csv(report: VerificationReport) -> str:
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(_CSV_COLUMNS)
    for r in report.records:
        writer.writerow(
            (
                r.n,
                r.code_hex,
                r.wiener,
                r.bound,
                r.slack,
                r.min_degree,
                r.separating_cycles,
                r.three_connected,
                r.degree_structure_ok,
                r.connectivity_ok,
                r.level_checked,
                r.level_failed,
                r.cert_total,
                r.cert_failed,
                ";".join(r.failures),
            )
        )
    return out.getvalue()


def _emit_report(report: VerificationReport, args) -> None:
    if args.report:
        text = report_to_csv(report) if args.format == "csv" else report_to_json(report)
        with open(args.report, "w", encoding="utf-8") as handle:
            handle.write(text)
    for n, info in report.summary["per_n"].items():
        print(
            f"n={n}: {info['count']} instances, "
            f"{len(info['extremal'])} extremal, ladder attained: {info['qn_attained']}"
        )
    print(f"{report.kind}: {'PASS' if report.ok else 'FAIL'} "
          f"({report.summary['instances']} instances, "
          f"{report.summary['failing_instances']} failing)")


# -- subcommands -----------------------------------------------------------------


def _cmd_construct(args) -> int:
    graph = build_qn(args.qn) if args.qn is not None else fixture(args.fixture)
    if args.emit == "pc":
        sys.stdout.buffer.write(write_planar_code([graph]))
        sys.stdout.buffer.flush()
    else:
        payload = {
            "n": graph.n,
            "rotation": [list(nbrs) for nbrs in graph.rotation],
            "wiener": wiener_index(graph),
            "conjectured_max": conjectured_max(graph.n),
        }
        print(json.dumps(payload, indent=2))
    return 0


def _cmd_wiener(args) -> int:
    if args.infile:
        with open(args.infile, "rb") as handle:
            data = handle.read()
    else:
        data = sys.stdin.buffer.read()
    for graph in read_planar_code(data):
        print(wiener_index(graph))
    return 0


def _cmd_enumerate(args) -> int:
    run = enumerate_quadrangulations(args.n, limit=args.limit, workers=worker_count())
    stream = write_planar_code(run.graphs())
    summary = json.dumps(
        {
            "schema_version": SCHEMA_VERSION,
            "kind": "enumerate",
            "n": run.n,
            "count": run.count,
            "elapsed_seconds": round(run.elapsed_seconds, 6),
        }
    )
    if args.out:
        with open(args.out, "wb") as handle:
            handle.write(stream)
        print(summary)
    else:
        sys.stdout.buffer.write(stream)
        sys.stdout.buffer.flush()
        print(summary, file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    if args.n_max < 4:
        print("error: --n-max must be at least 4", file=sys.stderr)
        return 2
    report = run_audit("verify", args.n_max, limit=args.limit, workers=worker_count())
    _emit_report(report, args)
    return 0 if report.ok else 1


def _cmd_audit(args) -> int:
    if args.n_max < 4:
        print("error: --n-max must be at least 4", file=sys.stderr)
        return 2
    kind = "lemmas" if args.lemmas else "surgery"
    report = run_audit(kind, args.n_max, limit=args.limit, workers=worker_count())
    _emit_report(report, args)
    return 0 if report.ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadwiener",
        description="Wiener-index extremality toolkit for sphere quadrangulations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit the extremal ladder or a fixture")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--qn", type=int, help="ladder size n >= 4")
    which.add_argument("--fixture", choices=FIXTURE_NAMES)
    p.add_argument("--emit", choices=("pc", "json"), default="pc")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("wiener", help="Wiener index of each planar_code record")
    p.add_argument("--in", dest="infile", help="planar_code file (default: stdin)")
    p.set_defaults(func=_cmd_wiener)

    p = sub.add_parser("enumerate", help="all quadrangulations of one size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="write the planar_code stream here")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="extremal bound and basic structure audits")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--report", help="write the full report here")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("audit", help="level-bound or surgery certificate sweeps")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--lemmas", action="store_true")
    which.add_argument("--surgery", action="store_true")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--report", help="write the full report here")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(func=_cmd_audit)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except QuadwienerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
