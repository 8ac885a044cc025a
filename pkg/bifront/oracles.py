"""Scalarization oracle contract and the call-counting instrumentation around it.

Enumerators never look inside a problem. They only ask an oracle for weighted-sum,
lexicographic weighted-sum or ε-constraint optima, and every such question is
counted so that the delay between two emitted points can be stated in oracle calls.
"""

import logging
import time
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from .core import Point, Weight
from .exceptions import UsageError
from .utils import RationalLike, to_fraction

logger = logging.getLogger(__name__)

Solution = Tuple[Union[int, Fraction], ...]


class OracleResult(NamedTuple):
    """An optimal solution together with its image point."""

    solution: Solution
    point: Point


def make_weight(w1: RationalLike, w2: RationalLike) -> Weight:
    """Build a nonnegative, non-zero 2-D weight.

    Raises:
        UsageError: If a component is negative or both are zero.
    """
    weight = (to_fraction(w1), to_fraction(w2))
    check_weight(weight)
    return weight


def check_weight(weight: Sequence[Fraction]) -> None:
    if len(weight) != 2:
        raise UsageError(f"Weights are 2-D, got {len(weight)} components.")
    if any(w < 0 for w in weight) or all(w == 0 for w in weight):
        raise UsageError(f"Weight {tuple(weight)} must be nonnegative and non-zero.")


def lex_key(weight: Weight, point: Point) -> Tuple[Fraction, Fraction, Fraction]:
    """Sort key of the lexicographic weighted sum: (ℓᵀy, y1, y2)."""
    return (weight[0] * point[0] + weight[1] * point[1], point[0], point[1])


class ScalarizationOracle(ABC):
    """Solvers for the three scalarizations of a biobjective problem.

    Implementations raise ``InfeasibleError`` when the solution set is empty (or, for
    ``eps_constraint``, when no solution meets the bound) and ``UnboundedError``
    when a scalarization has no finite optimum.
    """

    @abstractmethod
    def weighted_sum(self, weight: Weight) -> OracleResult:
        """Return a minimizer of ℓᵀCx."""

    @abstractmethod
    def lex_weighted_sum(self, weight: Weight) -> OracleResult:
        """Return the lexicographic minimizer of (ℓᵀCx, c1x, c2x)."""

    @abstractmethod
    def eps_constraint(self, bound: Optional[Fraction]) -> OracleResult:
        """Return the lexicographic minimizer of (c2x, c1x) subject to c1x < bound.

        A bound of None stands for +∞.
        """


class CallCounter:
    """Cumulative counters of oracle calls by scalarization kind.

    ``d2`` counts the dual LPs the facet walk solves to find its next facet. They
    are not scalarizations and are left out of ``total``.
    """

    ORACLE_KINDS = ("ws", "lex", "eps")
    KINDS = ORACLE_KINDS + ("d2",)

    def __init__(self):
        self.counts: Dict[str, int] = {kind: 0 for kind in self.KINDS}

    def tick(self, kind: str) -> None:
        self.counts[kind] += 1

    @property
    def ws(self) -> int:
        return self.counts["ws"]

    @property
    def lex(self) -> int:
        return self.counts["lex"]

    @property
    def eps(self) -> int:
        return self.counts["eps"]

    @property
    def d2(self) -> int:
        return self.counts["d2"]

    @property
    def total(self) -> int:
        return sum(self.counts[kind] for kind in self.ORACLE_KINDS)


class CountingOracle(ScalarizationOracle):
    """Wrap an oracle and count every call made through it."""

    def __init__(
        self, oracle: ScalarizationOracle, counter: Optional[CallCounter] = None
    ):
        self.oracle = oracle
        self.counter = counter or CallCounter()

    def weighted_sum(self, weight: Weight) -> OracleResult:
        self.counter.tick("ws")
        return self.oracle.weighted_sum(weight)

    def lex_weighted_sum(self, weight: Weight) -> OracleResult:
        self.counter.tick("lex")
        return self.oracle.lex_weighted_sum(weight)

    def eps_constraint(self, bound: Optional[Fraction]) -> OracleResult:
        self.counter.tick("eps")
        return self.oracle.eps_constraint(bound)


class EnumerationEvent(NamedTuple):
    """One emitted point with the cumulative call counters at emission time."""

    index: int
    point: Point
    ws_calls: int
    lex_calls: int
    eps_calls: int
    elapsed_ns: int


class EnumerationLog:
    """Record of the emissions of one enumeration run.

    Wall-clock times are informational. Delay is judged on the counters, which are
    reproducible across machines.
    """

    def __init__(self, counter: Optional[CallCounter] = None):
        self.counter = counter or CallCounter()
        self.events: List[EnumerationEvent] = []
        self.iterations = 0
        self.max_retained = 0
        self._start_ns = time.monotonic_ns()

    def record(self, point: Point) -> EnumerationEvent:
        event = EnumerationEvent(
            index=len(self.events) + 1,
            point=point,
            ws_calls=self.counter.ws,
            lex_calls=self.counter.lex,
            eps_calls=self.counter.eps,
            elapsed_ns=time.monotonic_ns() - self._start_ns,
        )
        self.events.append(event)
        logger.debug("Emitted point %d: %s", event.index, point)
        return event

    def retain(self, count: int) -> None:
        """Note how many points the enumerator currently holds."""
        self.max_retained = max(self.max_retained, count)

    @property
    def count(self) -> int:
        return len(self.events)

    @property
    def points(self) -> List[Point]:
        return [e.point for e in self.events]

    def interemission_calls(self, kind: str = "lex") -> List[int]:
        """Calls of one kind made between consecutive emissions.

        The first entry counts the calls made before the first emission.
        """
        field = f"{kind}_calls"
        previous = 0
        deltas = []
        for event in self.events:
            current = getattr(event, field)
            deltas.append(current - previous)
            previous = current
        return deltas

    def max_interemission_calls(self, kind: str = "lex") -> int:
        return max(self.interemission_calls(kind), default=0)
