import argparse
import logging
import sys
from pathlib import Path
from typing import Iterable, List, Optional, TextIO

from pydantic import ValidationError

from .core import Point
from .exceptions import (
    CapacityError,
    EmptyFrontError,
    EncoderError,
    InfeasibleError,
    LPError,
    RegistryError,
    UnboundedError,
    UsageError,
)
from .main import (
    bench,
    emission_record,
    encode,
    generate_gadget,
    run_algorithm,
    run_brute,
    run_summary,
)
from .models import (
    Caps,
    Command,
    DelayReport,
    EmissionRecord,
    OutputFormat,
    ProblemKind,
    RunConfig,
    RunSummary,
)
from .oracles import EnumerationLog

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_INFEASIBLE = 4

PADDING = 14  # column width in table output


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bifront",
        description="Enumerate nondominated extreme points and Pareto-fronts of "
        "biobjective problems with exact rational arithmetic.",
    )
    parser.add_argument("command", choices=[c.value for c in Command])
    parser.add_argument("--algorithm", help="Enumerator; defaults depend on command")
    parser.add_argument("--input", type=Path, help="Path to the instance file")
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.ndjson.value,
    )
    parser.add_argument(
        "--problem",
        choices=[ProblemKind.path.value, ProblemKind.tree.value, ProblemKind.cut.value],
        help="How to read a graph file",
    )
    parser.add_argument("--cap-nodes", type=int, help="Node cap for exhaustive search")
    parser.add_argument("--cap-n", type=int, help="Variable cap for exhaustive search")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--runs", type=int, default=100, help="bench-delay instances")
    parser.add_argument("--size", type=int, default=50, help="Random instance size")
    parser.add_argument("--report", type=Path, help="Write a TOML delay report here")
    parser.add_argument(
        "--timing", action="store_true", help="Add monotonic timestamps to records"
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)
    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
    )


def make_config(args: argparse.Namespace) -> RunConfig:
    """Validate the parsed arguments into a RunConfig."""
    caps = {}
    if args.cap_nodes is not None:
        caps.update(
            nodes_path=args.cap_nodes,
            nodes_tree=args.cap_nodes,
            nodes_cut=args.cap_nodes,
        )
    if args.cap_n is not None:
        caps.update(n_subsets=args.cap_n, lp_size=args.cap_n)
    try:
        return RunConfig(
            command=args.command,
            algorithm=args.algorithm,
            input=args.input,
            output_format=args.output_format,
            problem=args.problem,
            caps=Caps(**caps),
            seed=args.seed,
            runs=args.runs,
            size=args.size,
            report=args.report,
            timing=args.timing,
        )
    except ValidationError as e:
        raise UsageError(str(e)) from e


class StreamWriter:
    """Writes emission records and the summary in NDJSON or as a table."""

    def __init__(self, output_format: OutputFormat, out: Optional[TextIO] = None):
        self.output_format = output_format
        self.out = out or sys.stdout
        self._header_written = False

    def _line(self, text: str) -> None:
        self.out.write(text + "\n")
        self.out.flush()

    def record(self, record: EmissionRecord) -> None:
        if self.output_format == OutputFormat.ndjson:
            self._line(record.model_dump_json(exclude_none=True))
            return
        if not self._header_written:
            columns = ["i", "y1", "y2", "ws_calls", "lex_calls", "eps_calls"]
            if record.t_mono_ns is not None:
                columns.append("t_mono_ns")
            self._line(" ".join(f"{c:>{PADDING}}" for c in columns))
            self._header_written = True
        values = [record.i, *record.point, record.ws_calls, record.lex_calls]
        values.append(record.eps_calls)
        if record.t_mono_ns is not None:
            values.append(record.t_mono_ns)
        self._line(" ".join(f"{v:>{PADDING}}" for v in values))

    def summary(self, summary: RunSummary) -> None:
        if self.output_format == OutputFormat.ndjson:
            self._line(summary.model_dump_json(exclude_none=True))
            return
        for key, value in summary.model_dump(exclude_none=True).items():
            self._line(f"{key:<{PADDING * 2}} {value}")


def write_points(points: Iterable[Point], writer: StreamWriter) -> None:
    """Write a precomputed point list with zero call counters."""
    log = EnumerationLog()
    for point in points:
        writer.record(emission_record(log.record(point)))
    writer.summary(run_summary(log))


def write_report(report: DelayReport, config: RunConfig, out: TextIO) -> None:
    if config.output_format == OutputFormat.ndjson:
        for run in report.runs:
            out.write(run.model_dump_json() + "\n")
        out.write(report.model_dump_json(exclude={"runs"}) + "\n")
    else:
        columns = ["run", "count", "total_calls", "max_delay", "verdict"]
        out.write(" ".join(f"{c:>{PADDING}}" for c in columns) + "\n")
        for run in report.runs:
            values = [run.run, run.count, run.total_calls, run.max_interemission_calls]
            values.append("PASS" if run.passed else "FAIL")
            out.write(" ".join(f"{v:>{PADDING}}" for v in values) + "\n")
        out.write(f"{report.algorithm}: {report.check}: {report.verdict}\n")
    if config.report is not None:
        config.report.write_text(encode(report, "report"), encoding="utf-8")
        logger.info("Wrote delay report to %s.", config.report)


def run(config: RunConfig, out: Optional[TextIO] = None) -> int:
    """Execute one command and return its exit status."""
    out = out or sys.stdout
    writer = StreamWriter(config.output_format, out)

    if config.command == Command.generate_gadget:
        out.write(generate_gadget(config))
        return EXIT_OK

    if config.command == Command.brute:
        write_points(run_brute(config), writer)
        return EXIT_OK

    if config.command == Command.bench_delay:
        report = bench(config)
        write_report(report, config, out)
        return EXIT_OK if report.passed else EXIT_INTERNAL

    log = EnumerationLog()
    for event in run_algorithm(config, log):
        writer.record(emission_record(event, config.timing))
    writer.summary(run_summary(log, retained=config.command == Command.lp_extremes))
    if log.count == 0:
        raise EmptyFrontError("The instance has no feasible solution.")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return run(make_config(args))
    except (UsageError, RegistryError) as e:
        print(f"bifront: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as e:
        print(f"bifront: capacity exceeded: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except (InfeasibleError, UnboundedError) as e:
        print(f"bifront: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except LPError as e:
        print(f"bifront: LP failure: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except EncoderError as e:
        print(f"bifront: cannot write output: {e}", file=sys.stderr)
        return EXIT_INTERNAL
