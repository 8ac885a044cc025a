"""Top level functions for the bifront library"""

import logging
import random
from importlib import import_module
from pathlib import Path
from typing import Any, Iterator, List, Optional, Tuple, Union

from . import dichotomic, epsfront, lp  # noqa: F401 Registers all enumerators
from .brute import ExplicitOracle, brute_extremes, brute_lp_vertices, brute_oracle
from .core import BiFront
from .encoders import SUPPORTED_FORMATS
from .exceptions import EncoderError, ParseError, UsageError
from .models import (
    AlgorithmSpec,
    Caps,
    Command,
    CostDigraph,
    CostGraph,
    DelayReport,
    DelayRun,
    EmissionRecord,
    KPInstance,
    LPInstance,
    ProblemKind,
    RunConfig,
    RunSummary,
    UnconstrainedBi,
    registry,
)
from .oracles import EnumerationEvent, EnumerationLog, ScalarizationOracle
from .parsers import SUPPORTED_FILETYPES
from .parsers.utils import detect_filetype
from .problems import (
    kp_to_mosp,
    mincut_eps_oracle,
    most_oracle,
    mosp_oracle,
    random_kp,
    random_point_set,
)
from .utils import format_point, get_file_contents

__all__ = ["parse", "encode", "run_algorithm", "bench", "registry"]

logger = logging.getLogger(__name__)

DELAY_CHECKS = {
    "da-polydelay": "at most 2 lex calls between consecutive emissions",
    "da-lex": "at most 2i - 1 lex calls before emission i",
    "eps-sweep": "exactly count + 1 eps calls",
}


def parse(data_or_path: Union[str, bytes, Path], filetype: Optional[str] = None) -> Any:
    """Parse an instance file.

    Args:
        data_or_path: File contents (str or bytes) or path to the file to parse.
        filetype: One of 'points', 'lp', 'graph', 'knapsack' or 'unconstrained'.
            Detected from the first data line when omitted.

    Returns:
        A list of points, an LPInstance, a CostDigraph or CostGraph, a KPInstance
        or an UnconstrainedBi.

    Raises:
        ParseError: If the filetype is unknown or the file is malformed.
        UsageError: If the parsed data violates an instance invariant.
    """
    contents = get_file_contents(data_or_path)
    filetype = filetype or detect_filetype(contents)
    if filetype not in SUPPORTED_FILETYPES:
        raise ParseError(f"Unknown filetype '{filetype}'.")
    parser = import_module(f"bifront.parsers.{filetype}")
    return parser.parse(contents)


def encode(obj: Any, fmt: str, **kwargs: Any) -> str:
    """Encode an object with the encoder named fmt.

    Raises:
        EncoderError: If no encoder of that name exists.
    """
    if fmt not in SUPPORTED_FORMATS:
        raise EncoderError(f"Unknown output format '{fmt}'.")
    encoder = import_module(f"bifront.encoders.{fmt}")
    return encoder.encode(obj, **kwargs)


def resolve_kind(
    instance: Any, problem: Optional[ProblemKind], command: Command
) -> ProblemKind:
    """Decide how an instance is read: as points, paths, trees, cuts, subsets or LP."""
    if isinstance(instance, list):
        natural = [ProblemKind.points]
    elif isinstance(instance, LPInstance):
        natural = [ProblemKind.lp]
    elif isinstance(instance, UnconstrainedBi):
        natural = [ProblemKind.subset]
    elif isinstance(instance, CostDigraph):
        natural = [ProblemKind.path]
    elif isinstance(instance, CostGraph):
        # Global cuts are the front example, spanning trees the extremes example
        first = ProblemKind.cut if command == Command.front else ProblemKind.tree
        second = ProblemKind.tree if first == ProblemKind.cut else ProblemKind.cut
        natural = [first, second]
    else:
        raise UsageError(
            f"A {type(instance).__name__} cannot be used with '{command.value}'."
        )
    if problem is None:
        return natural[0]
    if problem not in natural:
        raise UsageError(
            f"--problem {problem.value} does not apply to a {type(instance).__name__}."
        )
    return problem


def load_instance(config: RunConfig) -> Tuple[ProblemKind, Any]:
    """Parse the configured input file and decide its problem kind."""
    if config.input is None:
        raise UsageError(f"Command '{config.command.value}' needs --input.")
    if not Path(config.input).is_file():
        raise UsageError(f"No such file: '{config.input}'.")
    instance = parse(config.input)
    kind = resolve_kind(instance, config.problem, config.command)
    logger.info("Read %s as a '%s' instance.", config.input, kind.value)
    return kind, instance


def build_oracle(instance: Any, kind: ProblemKind, caps: Caps) -> ScalarizationOracle:
    """Scalarization oracle for an instance read as kind."""
    if kind == ProblemKind.points:
        return ExplicitOracle(instance)
    if kind == ProblemKind.path:
        return mosp_oracle(instance, caps)
    if kind == ProblemKind.tree:
        return most_oracle(instance, caps)
    if kind == ProblemKind.cut:
        return mincut_eps_oracle(instance, caps)
    if kind == ProblemKind.subset:
        return brute_oracle(instance, kind, caps)
    raise UsageError(f"No scalarization oracle for '{kind.value}' instances.")


def enumerate_events(
    spec: AlgorithmSpec,
    instance: Any,
    kind: ProblemKind,
    caps: Caps,
    log: EnumerationLog,
) -> Iterator[EnumerationEvent]:
    """Run a registered enumerator and yield each emission as soon as it happens."""
    if kind not in spec.kinds:
        raise UsageError(
            f"Algorithm '{spec.name}' does not accept '{kind.value}' instances."
        )
    subject = build_oracle(instance, kind, caps) if spec.oracle else instance
    for k, _ in enumerate(spec.func(subject, log)):
        yield log.events[k]


def run_algorithm(
    config: RunConfig, log: Optional[EnumerationLog] = None
) -> Iterator[EnumerationEvent]:
    """Run the configured algorithm on the configured input file.

    Args:
        config: A validated run configuration for extremes, front or lp-extremes.
        log: Collects the emissions and counters; pass one in to read the summary.

    Yields:
        One EnumerationEvent per emitted point.
    """
    log = log if log is not None else EnumerationLog()
    kind, instance = load_instance(config)
    yield from enumerate_events(config.spec, instance, kind, config.caps, log)


def run_brute(config: RunConfig) -> BiFront:
    """Nondominated extreme points of the input by exhaustive enumeration."""
    kind, instance = load_instance(config)
    if kind == ProblemKind.lp:
        return brute_lp_vertices(instance, config.caps)
    return brute_extremes(instance, kind, config.caps)


def generate_gadget(config: RunConfig) -> str:
    """Graph file of the knapsack gadget, with the M trailer.

    The knapsack instance comes from --input, or is drawn with --seed and --size.
    """
    if config.input is not None:
        if not Path(config.input).is_file():
            raise UsageError(f"No such file: '{config.input}'.")
        kp = parse(config.input)
        if not isinstance(kp, KPInstance):
            raise UsageError("generate-gadget needs a knapsack file.")
    else:
        kp = random_kp(random.Random(config.seed), config.size)
    g, m_points = kp_to_mosp(kp)
    return encode(g, "graph", m_points=m_points)


def emission_record(event: EnumerationEvent, timing: bool = False) -> EmissionRecord:
    return EmissionRecord(
        i=event.index,
        point=format_point(event.point),
        ws_calls=event.ws_calls,
        lex_calls=event.lex_calls,
        eps_calls=event.eps_calls,
        t_mono_ns=event.elapsed_ns if timing else None,
    )


def run_summary(log: EnumerationLog, retained: bool = False) -> RunSummary:
    counter = log.counter
    return RunSummary(
        count=log.count,
        total_calls=counter.total,
        max_interemission_lex_calls=log.max_interemission_calls("lex"),
        ws_calls=counter.ws,
        lex_calls=counter.lex,
        eps_calls=counter.eps,
        max_retained=log.max_retained if retained else None,
        d2_solves=counter.d2 if retained else None,
    )


def delay_run(run: int, name: str, log: EnumerationLog) -> DelayRun:
    """Judge one benchmark run on its call counters."""
    if name == "da-polydelay":
        worst = log.max_interemission_calls("lex")
        passed = worst <= 2 and log.iterations == log.count
    elif name == "da-lex":
        worst = log.max_interemission_calls("lex")
        # A lone point still costs both corner calls
        allowed_total = max(2, 2 * log.count - 1)
        passed = log.counter.lex <= allowed_total and all(
            e.lex_calls <= 2 * e.index - 1 for e in log.events
        )
    elif name == "eps-sweep":
        worst = log.max_interemission_calls("eps")
        passed = log.counter.eps == log.count + 1
    else:
        raise UsageError(f"No delay check defined for '{name}'.")
    return DelayRun(
        run=run,
        count=log.count,
        total_calls=log.counter.total,
        max_interemission_calls=worst,
        passed=passed,
    )


def bench(config: RunConfig) -> DelayReport:
    """Run a streaming enumerator on several instances and check its delay bound.

    With --input the file is the only instance. Otherwise --runs random explicit
    point sets of --size points are drawn from one generator seeded with --seed.
    """
    spec = config.spec
    instances: List[Tuple[ProblemKind, Any]]
    if config.input is not None:
        instances = [load_instance(config)]
    else:
        rng = random.Random(config.seed)
        instances = [
            (ProblemKind.points, random_point_set(rng, config.size))
            for _ in range(config.runs)
        ]

    runs = []
    for run, (kind, instance) in enumerate(instances, start=1):
        log = EnumerationLog()
        for _ in enumerate_events(spec, instance, kind, config.caps, log):
            pass
        runs.append(delay_run(run, spec.name, log))
        logger.debug("Run %d: %s", run, runs[-1])
    report = DelayReport(
        algorithm=spec.name, check=DELAY_CHECKS[spec.name], seed=config.seed, runs=runs
    )
    logger.info("%s over %d runs: %s", spec.name, len(runs), report.verdict)
    return report
