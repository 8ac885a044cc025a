import logging

import pytest

from bifront.brute import ExplicitOracle, brute_front, brute_oracle
from bifront.core import make_point
from bifront.epsfront import EpsSweepState, eps_front_2d
from bifront.exceptions import UsageError
from bifront.models import ProblemKind, UnconstrainedBi
from bifront.oracles import EnumerationLog
from bifront.problems import (
    mincut_eps_oracle,
    mosp_oracle,
    random_graph,
    random_point_set,
)


def test_sweep_emits_front_in_decreasing_first_objective(eps_points):
    log = EnumerationLog()
    emitted = list(eps_front_2d(ExplicitOracle(eps_points), log))
    assert emitted == [make_point(3, 1), make_point(2, 2), make_point(1, 3)]
    assert log.counter.eps == 4
    assert log.counter.ws == log.counter.lex == 0


def test_sweep_on_min_cut_triangle(cut_triangle):
    log = EnumerationLog()
    emitted = list(eps_front_2d(mincut_eps_oracle(cut_triangle), log))
    assert emitted == [make_point(6, 3), make_point(5, 5), make_point(3, 6)]
    assert log.counter.eps == 4


def test_min_cut_oracle_answers_with_strict_bound(cut_triangle):
    oracle = mincut_eps_oracle(cut_triangle)
    assert oracle.eps_constraint(None).point == make_point(6, 3)
    assert oracle.eps_constraint(make_point(4)[0]).point == make_point(3, 6)


def test_sweep_on_subset_sum():
    oracle = brute_oracle(UnconstrainedBi.from_weights([1, 2]), ProblemKind.subset)
    log = EnumerationLog()
    emitted = list(eps_front_2d(oracle, log))
    assert len(emitted) == 4
    assert log.counter.eps == 5


def test_sweep_on_empty_instance_yields_nothing(caplog):
    log = EnumerationLog()
    with caplog.at_level(logging.WARNING, logger="bifront.epsfront"):
        assert list(eps_front_2d(ExplicitOracle([]), log)) == []
    assert log.counter.eps == 1
    assert "empty" in caplog.text


def test_sweep_matches_brute_force(make_rng):
    rng = make_rng(17)
    for _ in range(40):
        points = random_point_set(rng, rng.randint(1, 40))
        log = EnumerationLog()
        emitted = list(eps_front_2d(ExplicitOracle(points), log))
        assert sorted(emitted) == list(brute_front(points, ProblemKind.points))
        assert log.counter.eps == len(emitted) + 1
        assert [p[0] for p in emitted] == sorted((p[0] for p in emitted), reverse=True)


def test_sweep_on_spanning_trees_and_paths(make_rng, diamond_digraph):
    rng = make_rng(19)
    for _ in range(5):
        g = random_graph(rng, rng.randint(2, 5))
        emitted = list(eps_front_2d(brute_oracle(g, ProblemKind.tree)))
        assert sorted(emitted) == list(brute_front(g, ProblemKind.tree))

    emitted = list(eps_front_2d(mosp_oracle(diamond_digraph)))
    assert emitted == [
        make_point(4, 0),
        make_point(3, 1),
        make_point(1, 2),
        make_point(0, 4),
    ]


def test_state_rejects_bound_violations():
    state = EpsSweepState()
    state.advance(make_point(3, 1))
    assert state.current_bound == 3
    with pytest.raises(UsageError):
        state.advance(make_point(3, 2))


def test_state_rejects_answers_that_beat_an_earlier_one():
    state = EpsSweepState()
    state.advance(make_point(3, 1))
    # (2,1) has the same c2 and a smaller c1, so it should have come first
    with pytest.raises(UsageError):
        state.advance(make_point(2, 1))
