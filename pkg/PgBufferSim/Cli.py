# -*- coding: utf-8 -*-
""" Command line interface: pgbuffersim trace|run|compare|report|sweep

Exit codes: 0 success, 1 invalid input (flags, config, trace files), 2 internal error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from PgBufferSim.Exceptions import ConfigException, PgBufferSimException, PgBufferSimValidationException, \
    UsageException
from PgBufferSim.Objects import ComparisonReport, EvictionPolicy, RunReport, SimConfig, Trace
from PgBufferSim.Services import SimulatorService
from PgBufferSim.Utils import build_csv_from_reports, read_flat_config

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_INTERNAL = 2


class ArgumentParser(argparse.ArgumentParser):
    """ argparse parser whose errors raise instead of exiting, so main decides the exit code
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageException(f"{self.prog}: {message}")


def _split_names(value: str) -> List[str]:
    return [name.strip() for name in value.split(",") if name.strip()]


def _split_counts(value: str) -> List[int]:
    try:
        return [int(count) for count in _split_names(value)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got '{value}'")


def _write_text(text: str, destination: Optional[str]):
    if destination is None or destination == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    with open(destination, "w", encoding="utf-8", newline="") as file:
        file.write(text)
    logger.info("Wrote %s", destination)


def _load_config(args: argparse.Namespace) -> SimConfig:
    """ Config file values, overridden by command line flags
    """
    flat = dict()  # type: Dict[str, str]
    if args.config:
        try:
            text = Path(args.config).read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigException(f"Cannot read config file '{args.config}': {e}")
        flat = read_flat_config(text)
    overrides = {
        "capacity_pages": args.capacity,
        "policy": getattr(args, "policy", None),
        "seed": args.seed,
        "pin_hold_window": args.pin_window,
        "ring_buffer_enabled": args.ring,
        "ring_buffer_pages": args.ring_pages,
        "background_writer_enabled": args.bgwriter,
        "background_writer_pages_per_tick": args.bgwriter_rate,
        "per_group_estimates": args.per_group_estimates,
        "max_workers": args.workers,
        "seq_read_us": args.seq_us,
        "rand_read_us": args.rand_us,
        "dirty_writeback_us": args.dirty_us}
    if "capacity_pages" not in flat and args.capacity is None and getattr(args, "capacities", None):
        overrides["capacity_pages"] = args.capacities[0]
    return SimConfig.from_flat_dict(flat, **overrides)


def _read_traces(sim: SimulatorService, paths: Sequence[str]) -> Dict[str, Trace]:
    stems = [Path(path).stem for path in paths]
    names = stems if len(set(stems)) == len(stems) else list(paths)
    traces = dict()
    for name, path in zip(names, paths):
        try:
            traces[name] = sim.traces.read_trace(path)
        except OSError as e:
            raise ConfigException(f"Cannot read trace file '{path}': {e}")
    return traces


def cmd_gen_scan(args: argparse.Namespace) -> int:
    sim = SimulatorService()
    trace = sim.traces.generate_scan_workload(
        num_relations=args.relations, relation_blocks=args.blocks, num_streams=args.streams,
        scans_per_stream=args.scans, seed=args.seed)
    _write_text(sim.traces.dumps_trace(trace), args.out)
    return EXIT_OK


def cmd_gen_point(args: argparse.Namespace) -> int:
    sim = SimulatorService()
    trace = sim.traces.generate_point_workload(
        relation_blocks=args.blocks, num_requests=args.requests, zipf_s=args.zipf,
        write_fraction=args.write_fraction, seed=args.seed, relation=args.relation)
    _write_text(sim.traces.dumps_trace(trace), args.out)
    return EXIT_OK


def cmd_gen_mixed(args: argparse.Namespace) -> int:
    sim = SimulatorService()
    scan_params = {
        "num_relations": args.relations, "relation_blocks": args.blocks, "num_streams": args.streams,
        "scans_per_stream": args.scans}
    point_params = {
        "relation_blocks": args.point_blocks if args.point_blocks is not None else args.blocks,
        "num_requests": args.requests, "zipf_s": args.zipf, "write_fraction": args.write_fraction,
        "relation": args.point_relation}
    trace = sim.traces.generate_mixed_workload(scan_params, point_params, args.ratio, seed=args.seed)
    _write_text(sim.traces.dumps_trace(trace), args.out)
    return EXIT_OK


def cmd_run(args: argparse.Namespace) -> int:
    config = _load_config(args)
    sim = SimulatorService(seed=config.seed)
    (name, trace), = _read_traces(sim, [args.trace]).items()
    report = sim.experiments.run_simulation(trace, config, trace_name=name)
    _write_text(report.to_json(include_wall_time=not args.no_wall_time, indent=2), args.out)
    if args.csv:
        _write_text(build_csv_from_reports([report]), args.csv)
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    config = _load_config(args)
    sim = SimulatorService(seed=config.seed)
    traces = _read_traces(sim, args.trace)
    report = sim.experiments.compare_policies(traces, args.policies, config)
    _write_text(report.to_json(include_wall_time=not args.no_wall_time, indent=2), args.out)
    if args.csv:
        _write_text(build_csv_from_reports(report.runs), args.csv)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    config = _load_config(args)
    sim = SimulatorService(seed=config.seed)
    (name, trace), = _read_traces(sim, [args.trace]).items()
    reports = sim.experiments.sweep_capacities(trace, args.policies, args.capacities, config, trace_name=name)
    if args.out:
        body = [report.to_dict(include_wall_time=not args.no_wall_time) for report in reports]
        _write_text(json.dumps(body, sort_keys=True, indent=2), args.out)
    _write_text(build_csv_from_reports(reports), args.csv)
    return EXIT_OK


def format_ranking(report: ComparisonReport) -> str:
    lines = ["{:<4} {:<14} {:>18} {:>14} {:>6}".format("rank", "policy", "mean_latency_score", "mean_hit_rate",
                                                        "runs")]
    for rank, entry in enumerate(report.ranking, start=1):
        lines.append("{:<4} {:<14} {:>18.4f} {:>14.4f} {:>6}".format(
            rank, entry["policy"], entry["mean_latency_score"], entry["mean_hit_rate"], entry["runs"]))
    return "\n".join(lines) + "\n"


def cmd_report(args: argparse.Namespace) -> int:
    try:
        body = json.loads(Path(args.input).read_text(encoding="utf-8"))
    except OSError as e:
        raise ConfigException(f"Cannot read report '{args.input}': {e}")
    except ValueError as e:
        raise ConfigException(f"Report '{args.input}' is not valid JSON: {e}")
    try:
        if isinstance(body, dict) and "runs" in body:
            comparison = ComparisonReport.from_dict(body)
            runs = comparison.runs
        elif isinstance(body, list):
            comparison = None
            runs = [RunReport.from_dict(run) for run in body]
        else:
            comparison = None
            runs = [RunReport.from_dict(body)]
    except (KeyError, TypeError) as e:
        raise ConfigException(f"Report '{args.input}' does not follow the report schema: {e}")

    if args.ranking:
        if comparison is None:
            raise ConfigException("--ranking needs a comparison report")
        _write_text(format_ranking(comparison), None)
    if args.csv or not args.ranking:
        _write_text(build_csv_from_reports(runs), args.csv)
    return EXIT_OK


def _add_config_arguments(parser: argparse.ArgumentParser, with_policy: bool = True):
    parser.add_argument("--config", help="flat key=value config file, keys named after SimConfig fields")
    if with_policy:
        parser.add_argument("--policy", help="one of: " + ", ".join(EvictionPolicy.NAMES))
    parser.add_argument("--capacity", type=int, help="pool size in pages")
    parser.add_argument("--seed", type=int, help="master seed")
    parser.add_argument("--pin-window", type=int, help="pages each stream keeps pinned, 0 for pin-free")
    parser.add_argument("--ring", action="store_const", const=True, default=None,
                        help="route large scans through private ring buffers")
    parser.add_argument("--ring-pages", type=int, help="ring buffer size per scan")
    parser.add_argument("--bgwriter", action="store_const", const=True, default=None,
                        help="clean dirty pages in the background")
    parser.add_argument("--bgwriter-rate", type=float, help="pages cleaned per request tick")
    parser.add_argument("--per-group-estimates", action="store_const", const=True, default=None,
                        help="estimate next access per block group")
    parser.add_argument("--workers", type=int, help="threads for compare and sweep")
    parser.add_argument("--seq-us", type=float, help="sequential read cost in microseconds")
    parser.add_argument("--rand-us", type=float, help="random read cost in microseconds")
    parser.add_argument("--dirty-us", type=float, help="dirty write-back cost in microseconds")
    parser.add_argument("--no-wall-time", action="store_true", help="omit wall_time_ms from JSON output")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="pgbuffersim", description="Trace-driven buffer pool eviction simulator")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    trace = sub.add_parser("trace", help="generate workload traces")
    trace_sub = trace.add_subparsers(dest="generator", required=True)

    scan = trace_sub.add_parser("gen-scan", help="parallel sequential scans")
    scan.add_argument("--relations", type=int, required=True)
    scan.add_argument("--blocks", type=int, required=True, help="blocks per relation")
    scan.add_argument("--streams", type=int, required=True)
    scan.add_argument("--scans", type=int, required=True, help="scans per stream")
    scan.add_argument("--seed", type=int, default=0)
    scan.add_argument("--out", help="trace file, stdout if omitted")
    scan.set_defaults(func=cmd_gen_scan)

    point = trace_sub.add_parser("gen-point", help="Zipf-skewed point lookups")
    point.add_argument("--blocks", type=int, required=True)
    point.add_argument("--requests", type=int, required=True)
    point.add_argument("--zipf", type=float, default=0.0)
    point.add_argument("--write-fraction", type=float, default=0.0)
    point.add_argument("--relation", type=int, default=0)
    point.add_argument("--seed", type=int, default=0)
    point.add_argument("--out")
    point.set_defaults(func=cmd_gen_point)

    mixed = trace_sub.add_parser("gen-mixed", help="scans and point lookups interleaved")
    mixed.add_argument("--relations", type=int, required=True)
    mixed.add_argument("--blocks", type=int, required=True)
    mixed.add_argument("--streams", type=int, required=True)
    mixed.add_argument("--scans", type=int, required=True)
    mixed.add_argument("--requests", type=int, required=True, help="point requests generated")
    mixed.add_argument("--point-blocks", type=int, help="length of the point relation, --blocks if omitted")
    mixed.add_argument("--point-relation", type=int, default=0)
    mixed.add_argument("--zipf", type=float, default=0.0)
    mixed.add_argument("--write-fraction", type=float, default=0.0)
    mixed.add_argument("--ratio", type=float, required=True, help="fraction of scan requests")
    mixed.add_argument("--seed", type=int, default=0)
    mixed.add_argument("--out")
    mixed.set_defaults(func=cmd_gen_mixed)

    run = sub.add_parser("run", help="replay one trace under one policy")
    run.add_argument("--trace", required=True)
    _add_config_arguments(run)
    run.add_argument("--out", help="RunReport JSON, stdout if omitted")
    run.add_argument("--csv", help="flat CSV of metric rows")
    run.set_defaults(func=cmd_run)

    compare = sub.add_parser("compare", help="rank policies over a set of traces")
    compare.add_argument("--trace", action="append", required=True, help="repeat for several traces")
    compare.add_argument("--policies", type=_split_names, required=True, help="comma separated policy names")
    _add_config_arguments(compare, with_policy=False)
    compare.add_argument("--out", help="ComparisonReport JSON, stdout if omitted")
    compare.add_argument("--csv")
    compare.set_defaults(func=cmd_compare)

    report = sub.add_parser("report", help="convert a report JSON into CSV or a ranking table")
    report.add_argument("--input", required=True)
    report.add_argument("--csv", help="CSV destination, stdout if omitted")
    report.add_argument("--ranking", action="store_true", help="print the ranking of a comparison report")
    report.set_defaults(func=cmd_report)

    sweep = sub.add_parser("sweep", help="hit rate and latency over pool sizes")
    sweep.add_argument("--trace", required=True)
    sweep.add_argument("--policies", type=_split_names, required=True)
    sweep.add_argument("--capacities", type=_split_counts, required=True, help="comma separated pool sizes")
    _add_config_arguments(sweep, with_policy=False)
    sweep.add_argument("--out", help="JSON list of RunReports")
    sweep.add_argument("--csv", help="CSV destination, stdout if omitted")
    sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(
            level=logging.DEBUG if args.verbose else logging.WARNING,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s")
        return args.func(args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_OK
    except PgBufferSimValidationException as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_VALIDATION
    except PgBufferSimException as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INTERNAL
    except Exception as e:
        logger.exception("Unexpected failure")
        sys.stderr.write(f"internal error: {e}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
