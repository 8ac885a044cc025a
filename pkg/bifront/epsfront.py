"""Full Pareto-front enumeration by an ε-constraint sweep over objective 1."""

import logging
from fractions import Fraction
from typing import Iterator, Optional

from .core import BiFront, Point
from .exceptions import InfeasibleError, UsageError
from .models import Command, ProblemKind, algorithm
from .oracles import CountingOracle, EnumerationLog, ScalarizationOracle

logger = logging.getLogger(__name__)


class EpsSweepState:
    """Bound and emitted points of a running sweep.

    ``current_bound`` is None before the first call, standing for +∞.
    """

    def __init__(self):
        self.current_bound: Optional[Fraction] = None
        self.emitted = BiFront()

    def advance(self, point: Point) -> None:
        """Accept the oracle's answer to the current bound and tighten the bound.

        Raises:
            UsageError: If the answer violates the strict bound or does not trade c1
                for c2 against the previous answer.
        """
        if self.current_bound is not None and not point[0] < self.current_bound:
            raise UsageError(
                f"ε-constraint oracle returned {point}, which violates c1 < "
                f"{self.current_bound}."
            )
        if self.emitted and not point[1] > self.emitted[0][1]:
            raise UsageError(
                f"ε-constraint oracle returned {point}, which is not worse in c2 than "
                f"the earlier answer {self.emitted[0]}."
            )
        self.emitted.insert(point)
        self.current_bound = point[0]


@algorithm(
    "eps-sweep",
    commands=[Command.front, Command.bench_delay],
    kinds=[
        ProblemKind.points,
        ProblemKind.path,
        ProblemKind.tree,
        ProblemKind.cut,
        ProblemKind.subset,
    ],
)
def eps_front_2d(
    oracle: ScalarizationOracle, log: Optional[EnumerationLog] = None
) -> Iterator[Point]:
    """Yield every Pareto-optimal point in strictly decreasing objective 1.

    Each call minimizes (c2, c1) lexicographically under the strict bound c1 < ε,
    and ε becomes the first component of the point just found. The sweep stops at
    the first infeasible call, so it makes exactly |Y_N| + 1 oracle calls. An
    instance without solutions yields nothing.
    """
    log = log if log is not None else EnumerationLog()
    counted = CountingOracle(oracle, log.counter)
    state = EpsSweepState()
    while True:
        try:
            point = counted.eps_constraint(state.current_bound).point
        except InfeasibleError:
            break
        state.advance(point)
        log.iterations += 1
        log.retain(len(state.emitted))
        log.record(point)
        yield point
    if not state.emitted:
        logger.warning(
            "ε-constraint oracle is infeasible without a bound; the front is empty."
        )
    logger.info(
        "eps-sweep emitted %d points with %d calls.", log.count, log.counter.eps
    )
