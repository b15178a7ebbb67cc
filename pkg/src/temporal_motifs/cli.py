"""Command-line interface.

Subcommands: count, timescales, analyze, bench, gen, oracle.  Input is
SNAP-style ``src dst timestamp`` text (gzip transparent); matrices are
emitted as JSON with metadata or as ``i,j,count`` CSV.  Exit codes: 0
success, 1 usage error, 2 data error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from pathlib import Path

from .analysis import analyze, timescale_counts
from .catalog import CountMatrix
from .graph import EdgeListParseError, TemporalGraph, load_edge_list, write_edge_list
from .pipeline import ALL_CLASSES, count_motifs
from .verification import (
    Instrumentation,
    OracleCapExceededError,
    gen_random,
    gen_worstcase,
    oracle_count,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class InternalInvariantError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        raise UsageError(message)


def _delta_arg(text: str) -> int | float:
    if text.strip().lower() == "inf":
        return math.inf
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"delta must be an integer or 'inf': {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("delta must be >= 0")
    return value


def _delta_json(delta: int | float) -> int | str:
    return "inf" if delta == math.inf else int(delta)


def _classes_arg(text: str) -> tuple[str, ...]:
    if not text.strip():
        return ()
    classes = tuple(part.strip() for part in text.split(","))
    unknown = set(classes) - set(ALL_CLASSES)
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown classes: {sorted(unknown)}")
    return classes


def _load_graph(path: str, max_edges: int | None) -> TemporalGraph:
    try:
        return load_edge_list(path, max_edges=max_edges)
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc
    except EdgeListParseError as exc:
        raise DataError(f"{path}: {exc}") from exc


def _write_output(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        Path(output).write_text(text)


def _matrix_csv(matrix: CountMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["i", "j", "count"])
    for (i, j), value in matrix.items():
        writer.writerow([i, j, value])
    return buf.getvalue()


def _check_nonnegative(matrix: CountMatrix, context: str) -> None:
    for cell, value in matrix.items():
        if value < 0:
            raise InternalInvariantError(f"negative count {value} at {cell} in {context}")


def _cmd_count(args) -> int:
    graph = _load_graph(args.input, args.max_edges)
    started = time.perf_counter()
    matrix = count_motifs(
        graph, args.delta, classes=args.classes, workers=args.workers
    )
    elapsed = time.perf_counter() - started
    _check_nonnegative(matrix, "count pipeline")
    if args.format == "csv":
        _write_output(_matrix_csv(matrix), args.output)
    else:
        payload = {
            "delta": _delta_json(args.delta),
            "n": graph.n,
            "m": graph.m,
            "classes": sorted(args.classes),
            "runtime_seconds": round(elapsed, 6),
            "matrix": matrix.to_rows(),
        }
        _write_output(json.dumps(payload, indent=2), args.output)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    graph = _load_graph(args.input, args.max_edges)
    started = time.perf_counter()
    try:
        matrix = oracle_count(graph, args.delta, cap=args.cap)
    except OracleCapExceededError as exc:
        raise DataError(str(exc)) from exc
    elapsed = time.perf_counter() - started
    if args.format == "csv":
        _write_output(_matrix_csv(matrix), args.output)
    else:
        payload = {
            "delta": _delta_json(args.delta),
            "n": graph.n,
            "m": graph.m,
            "runtime_seconds": round(elapsed, 6),
            "matrix": matrix.to_rows(),
        }
        _write_output(json.dumps(payload, indent=2), args.output)
    return EXIT_OK


def _cmd_timescales(args) -> int:
    if any(b <= a for a, b in zip(args.deltas, args.deltas[1:])):
        raise UsageError("deltas must be strictly ascending")
    graph = _load_graph(args.input, args.max_edges)
    intervals = timescale_counts(graph, args.deltas, workers=args.workers)
    for (low, high), matrix in intervals:
        for cell, value in matrix.items():
            if value < 0:
                raise InternalInvariantError(
                    f"negative interval count {value} at {cell} for ({low}, {high}]"
                )
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["low", "high", "i", "j", "count"])
        for (low, high), matrix in intervals:
            for (i, j), value in matrix.items():
                writer.writerow([_delta_json(low), _delta_json(high), i, j, value])
        _write_output(buf.getvalue(), args.output)
    else:
        payload = {
            "deltas": [_delta_json(d) for d in args.deltas],
            "n": graph.n,
            "m": graph.m,
            "intervals": [
                {
                    "low": _delta_json(low),
                    "high": _delta_json(high),
                    "matrix": matrix.to_rows(),
                }
                for (low, high), matrix in intervals
            ],
        }
        _write_output(json.dumps(payload, indent=2), args.output)
    return EXIT_OK


def _read_matrix_file(path: str) -> CountMatrix:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc
    stripped = text.lstrip()
    try:
        if stripped.startswith("{") or stripped.startswith("["):
            data = json.loads(text)
            rows = data["matrix"] if isinstance(data, dict) else data
            return CountMatrix(rows)
        matrix = CountMatrix()
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if [h.strip() for h in header[:3]] != ["i", "j", "count"]:
            raise ValueError(f"unexpected CSV header: {header}")
        for row in reader:
            if row:
                matrix[(int(row[0]), int(row[1]))] = int(row[2])
        return matrix
    except (ValueError, KeyError, StopIteration) as exc:
        raise DataError(f"not a count matrix file: {path} ({exc})") from exc


def _cmd_analyze(args) -> int:
    report = analyze(_read_matrix_file(args.matrix))
    _write_output(json.dumps(report.to_dict(), indent=2), args.output)
    return EXIT_OK


def _cmd_bench(args) -> int:
    graph = _load_graph(args.input, args.max_edges)
    instrumentation = Instrumentation()
    started = time.perf_counter()
    matrix = count_motifs(
        graph,
        args.delta,
        algorithm=args.algorithm,
        workers=args.workers,
        instrumentation=instrumentation,
    )
    elapsed = time.perf_counter() - started
    payload = {
        "algorithm": args.algorithm,
        "delta": _delta_json(args.delta),
        "n": graph.n,
        "m": graph.m,
        "total_count": matrix.total(),
        **instrumentation.report(wall_time=round(elapsed, 6)),
    }
    _write_output(json.dumps(payload, indent=2), args.output)
    return EXIT_OK


def _cmd_gen(args) -> int:
    if args.kind == "random":
        graph = gen_random(args.nodes, args.edges, args.t_max, args.seed)
        header = (
            f"gen random n={args.nodes} m={args.edges} "
            f"t_max={args.t_max} seed={args.seed}"
        )
    else:
        graph = gen_worstcase(args.nodes, args.edges)
        header = f"gen worstcase n={args.nodes} m={args.edges}"
    write_edge_list(graph, args.output, header=header)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="temporal-motifs", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_delta=True):
        p.add_argument("input", help="edge list file (SNAP text, .gz ok)")
        if with_delta:
            p.add_argument(
                "--delta", "-d", type=_delta_arg, required=True,
                help="window width in seconds, or 'inf'",
            )
        p.add_argument("--output", "-o", default=None, help="output file (default stdout)")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument(
            "--max-edges", type=int, default=None,
            help="load only the first N edge records",
        )
        p.add_argument(
            "--workers", type=int, default=max(1, os.cpu_count() or 1),
            help="worker threads; results do not depend on this",
        )

    p_count = sub.add_parser("count", help="count motifs in the 6x6 grid")
    common(p_count)
    p_count.add_argument(
        "--classes", type=_classes_arg, default=ALL_CLASSES,
        help="comma-separated subset of pair,star,triangle (default all)",
    )
    p_count.set_defaults(func=_cmd_count)

    p_oracle = sub.add_parser("oracle", help="brute-force reference count")
    common(p_oracle)
    p_oracle.add_argument("--cap", type=int, default=200, help="edge cap for the cubic scan")
    p_oracle.set_defaults(func=_cmd_oracle)

    p_ts = sub.add_parser("timescales", help="interval counts for ascending deltas")
    common(p_ts, with_delta=False)
    p_ts.add_argument(
        "--deltas", type=_delta_arg, nargs="+", required=True,
        help="strictly ascending window widths",
    )
    p_ts.set_defaults(func=_cmd_timescales)

    p_an = sub.add_parser("analyze", help="derived metrics from a count matrix")
    p_an.add_argument("matrix", help="matrix file from 'count' (JSON or CSV), '-' for stdin")
    p_an.add_argument("--output", "-o", default=None)
    p_an.set_defaults(func=_cmd_analyze)

    p_bench = sub.add_parser("bench", help="instrumented counting run")
    common(p_bench)
    p_bench.add_argument("--algorithm", choices=("fast", "baseline"), default="fast")
    p_bench.set_defaults(func=_cmd_bench)

    p_gen = sub.add_parser("gen", help="write a synthetic edge list")
    gen_sub = p_gen.add_subparsers(dest="kind", required=True)
    p_rand = gen_sub.add_parser("random")
    p_rand.add_argument("--nodes", "-n", type=int, required=True)
    p_rand.add_argument("--edges", "-m", type=int, required=True)
    p_rand.add_argument("--t-max", type=int, default=1000)
    p_rand.add_argument("--seed", type=int, default=0)
    p_rand.add_argument("--output", "-o", required=True)
    p_rand.set_defaults(func=_cmd_gen, kind="random")
    p_worst = gen_sub.add_parser("worstcase")
    p_worst.add_argument("--nodes", "-n", type=int, required=True)
    p_worst.add_argument("--edges", "-m", type=int, required=True)
    p_worst.add_argument("--output", "-o", required=True)
    p_worst.set_defaults(func=_cmd_gen, kind="worstcase")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
