from fractions import Fraction

import pytest

from bifront.core import (
    BiFront,
    archive_insert,
    dominates,
    hull_extremes_2d,
    make_point,
    merge_fronts,
    pareto_filter,
    weighted_value,
)
from bifront.exceptions import UsageError
from bifront.problems import random_point_set


def pts(*pairs):
    return [make_point(*p) for p in pairs]


def test_dominates():
    assert dominates(make_point(1, 2), make_point(1, 3))
    assert dominates(make_point(0, 0), make_point(1, 1))
    assert not dominates(make_point(1, 2), make_point(1, 2))
    assert not dominates(make_point(1, 3), make_point(2, 2))


def test_dominates_rejects_mixed_dimensions():
    with pytest.raises(UsageError):
        dominates(make_point(1, 2), make_point(1, 2, 3))


def test_weighted_value():
    assert weighted_value(make_point(2, 1), make_point(1, "1/2")) == Fraction(5, 2)


def test_pareto_filter_drops_dominated_and_duplicates(five_points):
    result = pareto_filter(five_points + [make_point(1, 2)])
    assert result == pts((0, 4), (1, 2), (2, 1), (4, 0))


def test_pareto_filter_in_three_dimensions():
    points = pts((1, 2, 3), (1, 2, 4), (3, 2, 1))
    assert pareto_filter(points) == pts((1, 2, 3), (3, 2, 1))


def test_hull_extremes_drops_points_on_segments():
    # (1,1) lies on the segment between (0,2) and (2,0)
    front = hull_extremes_2d(pts((0, 2), (1, 1), (2, 0)))
    assert front == pts((0, 2), (2, 0))


def test_hull_extremes_drops_points_above_the_chain(five_points):
    extra = pts(("3/2", "3/2"), (3, "2/3"))
    assert hull_extremes_2d(five_points + extra) == pts((0, 4), (1, 2), (2, 1), (4, 0))


def test_hull_extremes_of_a_single_point():
    assert hull_extremes_2d(pts((5, 5), (6, 6))) == pts((5, 5))


def test_hull_extremes_rejects_empty_input():
    with pytest.raises(UsageError):
        hull_extremes_2d([])


def test_bifront_keeps_invariants_on_insert():
    front = BiFront()
    assert front.insert(make_point(2, 2))
    assert front.insert(make_point(0, 4))
    assert not front.insert(make_point(3, 3))
    assert not front.insert(make_point(2, 2))
    assert front.insert(make_point(1, 1))
    # (1,1) dominates (2,2)
    assert front == pts((0, 4), (1, 1))
    assert make_point(2, 2) not in front
    assert make_point(1, 1) in front
    assert front.is_valid()


def test_bifront_insert_removes_a_dominated_span():
    front = BiFront(pts((0, 9), (1, 8), (2, 7), (3, 6), (9, 0)))
    assert front.insert(make_point(1, 5))
    assert front == pts((0, 9), (1, 5), (9, 0))


def test_bifront_rejects_non_2d_points():
    with pytest.raises(UsageError):
        BiFront().insert(make_point(1, 2, 3))


def test_archive_insert_matches_pareto_filter(make_rng):
    rng = make_rng(7)
    for _ in range(30):
        points = random_point_set(rng, 25)
        front = BiFront()
        for p in points:
            archive_insert(front, p)
        assert front.is_valid()
        assert list(front) == pareto_filter(points)


@pytest.mark.parametrize("dim", [2, 3])
def test_dominates_is_a_strict_partial_order(make_rng, dim):
    rng = make_rng(43)
    for _ in range(500):
        p, q, r = (
            make_point(*(rng.randint(0, 2) for _ in range(dim))) for _ in range(3)
        )
        assert not dominates(p, p)
        assert not (dominates(p, q) and dominates(q, p))
        if dominates(p, q) and dominates(q, r):
            assert dominates(p, r)


def test_pareto_filter_is_idempotent(make_rng):
    rng = make_rng(47)
    for _ in range(50):
        front = pareto_filter(random_point_set(rng, rng.randint(1, 30), bound=6))
        assert pareto_filter(front) == front


def test_hull_extremes_are_nondominated(make_rng):
    rng = make_rng(53)
    for _ in range(50):
        points = random_point_set(rng, rng.randint(1, 30), bound=6)
        assert set(hull_extremes_2d(points)) <= set(pareto_filter(points))

def test_merge_fronts():
    left = BiFront(pts((0, 4), (2, 2)))
    right = BiFront(pts((1, 3), (2, 1), (5, 0)))
    assert merge_fronts(left, right) == pts((0, 4), (1, 3), (2, 1), (5, 0))
    assert len(merge_fronts([], [])) == 0


def test_make_point_rejects_floats():
    with pytest.raises(UsageError):
        make_point(0.5, 1)
