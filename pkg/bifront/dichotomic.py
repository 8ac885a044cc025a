"""Dichotomic weighted-sum enumeration of nondominated extreme points.

All three variants split the gap between two known points with the weight normal to
the segment joining them. They differ in the scalarization used and in when points
are announced:

- ``da-plain`` uses plain weighted sums, so it may see non-extreme optima. It removes
  them at the end and returns the whole set at once.
- ``da-lex`` uses lexicographic weighted sums. Every answer is extreme, so points are
  emitted as soon as they are found.
- ``da-polydelay`` also uses lexicographic weighted sums but withholds each point
  until one of its gaps has been searched, so at most two oracle calls separate
  consecutive emissions.
"""

import logging
from collections import deque
from typing import Deque, Iterator, Optional, Set, Tuple

from .core import BiFront, Point, Weight, dominates, hull_extremes_2d, weighted_value
from .exceptions import EmptyFrontError, InfeasibleError, UsageError
from .models import Command, ProblemKind, algorithm
from .oracles import CountingOracle, EnumerationLog, ScalarizationOracle

logger = logging.getLogger(__name__)

COMBINATORIAL_KINDS = [
    ProblemKind.points,
    ProblemKind.path,
    ProblemKind.tree,
    ProblemKind.cut,
    ProblemKind.subset,
]


def lambda_for(y2: Point, y3: Point) -> Weight:
    """Weight under which y2 and y3 have equal weighted value.

    For (0,4) and (1,2) this is (2,1): 2·0 + 1·4 = 2·1 + 1·2.
    """
    if len(y2) != 2 or len(y3) != 2:
        raise UsageError("lambda_for needs two 2-D points.")
    if y2 == y3:
        raise UsageError(f"lambda_for needs two distinct points, got {y2} twice.")
    return (abs(y2[1] - y3[1]), abs(y2[0] - y3[0]))


class PairQueue:
    """FIFO of gaps (y_left, y_right) still to be searched, y_left <_lex y_right."""

    def __init__(self):
        self._entries: Deque[Tuple[Point, Point]] = deque()

    def push(self, left: Point, right: Point) -> None:
        if not left < right:
            raise UsageError(f"Gap ({left}, {right}) is not in lexicographic order.")
        self._entries.append((left, right))

    def pop(self) -> Tuple[Point, Point]:
        return self._entries.popleft()

    def __len__(self) -> int:
        return len(self._entries)


class TripleQueue:
    """FIFO of withheld points (y_new, y_left, y_right).

    Each triple satisfies y_left <_lex y_new <_lex y_right.
    """

    def __init__(self):
        self._entries: Deque[Tuple[Point, Point, Point]] = deque()

    def push(self, new: Point, left: Point, right: Point) -> None:
        if not left < new < right:
            raise UsageError(f"{new} does not lie strictly between {left} and {right}.")
        self._entries.append((new, left, right))

    def pop(self) -> Tuple[Point, Point, Point]:
        return self._entries.popleft()

    def __len__(self) -> int:
        return len(self._entries)


def _ordered(a: Point, b: Point) -> Tuple[Point, Point]:
    return (a, b) if a < b else (b, a)


@algorithm(
    "da-plain",
    commands=[Command.extremes],
    kinds=COMBINATORIAL_KINDS,
    streams=False,
)
def da_plain(
    oracle: ScalarizationOracle, log: Optional[EnumerationLog] = None
) -> BiFront:
    """Nondominated extreme points by the plain dichotomic approach.

    Args:
        oracle: Any scalarization oracle; only ``weighted_sum`` is called.
        log: Receives the ws call counts. Points are recorded once the final hull
            filter has run.

    Returns:
        The nondominated extreme points in BiFront order.

    Raises:
        EmptyFrontError: If the oracle reports an empty solution set.
    """
    log = log if log is not None else EnumerationLog()
    counted = CountingOracle(oracle, log.counter)
    try:
        y0 = counted.weighted_sum((1, 0)).point
        y1 = counted.weighted_sum((0, 1)).point
    except InfeasibleError as e:
        raise EmptyFrontError(f"The solution set is empty: {e}") from e

    found: Set[Point] = {y0, y1}
    queue = PairQueue()
    if y0 != y1:
        queue.push(*_ordered(y0, y1))
    while queue:
        left, right = queue.pop()
        lam = lambda_for(left, right)
        ybar = counted.weighted_sum(lam).point
        log.iterations += 1
        if not weighted_value(lam, ybar) < weighted_value(lam, left):
            continue
        logger.debug("Gap %s-%s split by %s under weight %s.", left, right, ybar, lam)
        found.add(ybar)
        # Only a weak corner from ws(1,0) or ws(0,1) can be dominated; ybar takes
        # its place instead of opening a gap to it.
        for end in (left, right):
            if dominates(ybar, end):
                logger.debug("%s replaces the dominated endpoint %s.", ybar, end)
                found.discard(end)
            else:
                queue.push(*_ordered(end, ybar))

    log.retain(len(found))
    front = hull_extremes_2d(found)
    logger.info(
        "da-plain kept %d of %d candidates after %d ws calls.",
        len(front),
        len(found),
        log.counter.ws,
    )
    for point in front:
        log.record(point)
    return front


@algorithm(
    "da-lex",
    commands=[Command.extremes, Command.bench_delay],
    kinds=COMBINATORIAL_KINDS,
)
def da_lex(
    oracle: ScalarizationOracle, log: Optional[EnumerationLog] = None
) -> Iterator[Point]:
    """Yield the nondominated extreme points as they are found.

    The two corner points come from lexicographic weights (1,0) and (0,1); each
    queued gap then costs exactly one lex call, for 2k - 1 calls in total on k
    points (2 when the corners coincide).

    Raises:
        EmptyFrontError: If the oracle reports an empty solution set.
    """
    log = log if log is not None else EnumerationLog()
    counted = CountingOracle(oracle, log.counter)
    try:
        y0 = counted.lex_weighted_sum((1, 0)).point
        log.record(y0)
        yield y0
        y1 = counted.lex_weighted_sum((0, 1)).point
    except InfeasibleError as e:
        raise EmptyFrontError(f"The solution set is empty: {e}") from e
    if y1 == y0:
        return
    log.record(y1)
    yield y1

    queue = PairQueue()
    queue.push(y0, y1)
    known = 2
    while queue:
        log.retain(known + 2 * len(queue))
        left, right = queue.pop()
        lam = lambda_for(left, right)
        z = counted.lex_weighted_sum(lam).point
        log.iterations += 1
        if not weighted_value(lam, z) < weighted_value(lam, left):
            logger.debug("Gap %s-%s certified empty.", left, right)
            continue
        known += 1
        log.record(z)
        yield z
        queue.push(left, z)
        queue.push(z, right)


@algorithm(
    "da-polydelay",
    commands=[Command.extremes, Command.bench_delay],
    kinds=COMBINATORIAL_KINDS,
)
def da_polydelay(
    oracle: ScalarizationOracle, log: Optional[EnumerationLog] = None
) -> Iterator[Point]:
    """Yield the nondominated extreme points, at most two lex calls apart.

    A newly found point is not announced right away. It waits in a FIFO together
    with the gap it came from; each main-loop iteration announces one waiting point
    and searches the two gaps on either side of it. ``log.iterations`` therefore
    equals the number of emitted points.

    Raises:
        EmptyFrontError: If the oracle reports an empty solution set.
    """
    log = log if log is not None else EnumerationLog()
    counted = CountingOracle(oracle, log.counter)
    queue = TripleQueue()

    def search(left: Point, right: Point) -> None:
        lam = lambda_for(left, right)
        z = counted.lex_weighted_sum(lam).point
        if weighted_value(lam, z) < weighted_value(lam, left):
            queue.push(z, left, right)
        else:
            logger.debug("Gap %s-%s certified empty.", left, right)

    try:
        y0 = counted.lex_weighted_sum((1, 0)).point
        log.iterations += 1
        log.record(y0)
        yield y0
        y1 = counted.lex_weighted_sum((0, 1)).point
    except InfeasibleError as e:
        raise EmptyFrontError(f"The solution set is empty: {e}") from e
    if y1 == y0:
        return
    log.iterations += 1
    log.record(y1)
    yield y1

    search(y0, y1)
    while queue:
        log.retain(2 + 3 * len(queue))
        z, left, right = queue.pop()
        log.iterations += 1
        log.record(z)
        yield z
        search(left, z)
        search(z, right)
