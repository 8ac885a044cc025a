"""Exact 2-D objective-space geometry: dominance, Pareto archives and hull chains.

Points are plain tuples of ``fractions.Fraction``. Fractions are always stored in
lowest terms with a positive denominator, so every value produced here is already
canonical and tuple comparison is the lexicographic order on points.
"""

import logging
from bisect import bisect_left, bisect_right
from fractions import Fraction
from typing import Iterable, Iterator, List, Sequence, Tuple

from .exceptions import UsageError
from .utils import RationalLike, to_fraction

logger = logging.getLogger(__name__)

Rational = Fraction
Point = Tuple[Fraction, ...]
Weight = Tuple[Fraction, Fraction]


def make_point(*values: RationalLike) -> Point:
    """Build a point from ints, Fractions or "p/q" strings.

    >>> make_point(1, "1/2")
    (Fraction(1, 1), Fraction(1, 2))
    """
    if not values:
        raise UsageError("A point needs at least one component.")
    return tuple(to_fraction(v) for v in values)


def _check_same_dimension(points: Sequence[Point]) -> int:
    dims = {len(p) for p in points}
    if len(dims) > 1:
        raise UsageError(f"Points of mixed dimensions {sorted(dims)}.")
    return dims.pop() if dims else 0


def weighted_value(weight: Sequence[Fraction], point: Point) -> Fraction:
    """Return the scalar product weightᵀpoint."""
    if len(weight) != len(point):
        raise UsageError(
            f"Weight of dimension {len(weight)} applied to a point of dimension "
            f"{len(point)}."
        )
    return sum((w * y for w, y in zip(weight, point)), Fraction(0))


def dominates(p: Point, q: Point) -> bool:
    """True iff p ≤ q componentwise and p ≠ q.

    Raises:
        UsageError: If p and q differ in dimension.
    """
    if len(p) != len(q):
        raise UsageError(f"Cannot compare points of dimension {len(p)} and {len(q)}.")
    return p != q and all(a <= b for a, b in zip(p, q))


def pareto_filter(points: Iterable[Point]) -> List[Point]:
    """Return the points not dominated by any other input point.

    Duplicates collapse to one entry. The result is sorted lexicographically, which
    for 2-D input is BiFront order.
    """
    unique = sorted(set(points))
    dim = _check_same_dimension(unique)
    if dim == 2:
        # Lexicographic sweep: a point survives iff its y2 beats every earlier y2.
        result: List[Point] = []
        for p in unique:
            if not result or p[1] < result[-1][1]:
                result.append(p)
        return result
    return [p for p in unique if not any(dominates(q, p) for q in unique)]


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull_extremes_2d(points: Iterable[Point]) -> "BiFront":
    """Return the nondominated vertices of conv(points) + R²≥ in BiFront order.

    This is the lower-left convex chain of the Pareto filter. Points lying on a
    segment between two chain vertices are not vertices and are dropped.

    Raises:
        UsageError: If the input is empty or not 2-D.
    """
    nondominated = pareto_filter(points)
    if not nondominated:
        raise UsageError("hull_extremes_2d needs at least one point.")
    if len(nondominated[0]) != 2:
        raise UsageError("hull_extremes_2d is defined for 2-D points only.")

    chain: List[Point] = []
    for p in nondominated:
        while len(chain) > 1 and _cross(chain[-2], chain[-1], p) <= 0:
            chain.pop()
        chain.append(p)
    return BiFront._from_sorted(chain)


class BiFront:
    """Archive of mutually nondominated 2-D points.

    Members are kept sorted by strictly increasing first component, which forces the
    second components to be strictly decreasing.
    """

    __slots__ = ("_points", "_xs")

    def __init__(self, points: Iterable[Point] = ()):
        self._points: List[Point] = []
        self._xs: List[Fraction] = []
        for p in points:
            self.insert(p)

    @classmethod
    def _from_sorted(cls, points: List[Point]) -> "BiFront":
        front = cls()
        front._points = list(points)
        front._xs = [p[0] for p in points]
        return front

    @property
    def points(self) -> Tuple[Point, ...]:
        return tuple(self._points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __len__(self) -> int:
        return len(self._points)

    def __getitem__(self, index: int) -> Point:
        return self._points[index]

    def __contains__(self, p: object) -> bool:
        if not isinstance(p, tuple) or len(p) != 2:
            return False
        i = bisect_left(self._xs, p[0])
        return i < len(self._points) and self._points[i] == p

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiFront):
            return self._points == other._points
        if isinstance(other, (list, tuple)):
            return self._points == list(other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"BiFront({self._points!r})"

    def copy(self) -> "BiFront":
        return BiFront._from_sorted(self._points)

    def insert(self, p: Point) -> bool:
        """Insert p unless it is dominated or already present.

        Members dominated by p form one contiguous span starting at p's position;
        they are removed. Returns True iff p was added.
        """
        if len(p) != 2:
            raise UsageError(f"BiFront holds 2-D points, got dimension {len(p)}.")
        x, y = p
        # Rightmost member with first component ≤ x has the smallest second component
        # among all such members.
        j = bisect_right(self._xs, x) - 1
        if j >= 0 and self._points[j][1] <= y:
            return False
        start = bisect_left(self._xs, x)
        stop = start
        while stop < len(self._points) and self._points[stop][1] >= y:
            stop += 1
        self._points[start:stop] = [p]
        self._xs[start:stop] = [x]
        return True

    def is_valid(self) -> bool:
        """Check both ordering invariants."""
        return all(
            a[0] < b[0] and a[1] > b[1] for a, b in zip(self._points, self._points[1:])
        )


def archive_insert(front: BiFront, p: Point) -> BiFront:
    """Insert p into the archive in place and return the archive."""
    front.insert(p)
    return front


def merge_fronts(left: Iterable[Point], right: Iterable[Point]) -> BiFront:
    """Pareto merge of two BiFront-ordered sequences in one sweep."""
    merged = sorted([*left, *right])
    return BiFront._from_sorted(pareto_filter(merged)) if merged else BiFront()
