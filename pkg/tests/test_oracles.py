import pytest

from bifront.brute import ExplicitOracle
from bifront.core import make_point
from bifront.exceptions import InfeasibleError, UsageError
from bifront.oracles import (
    CallCounter,
    CountingOracle,
    EnumerationLog,
    lex_key,
    make_weight,
)


def test_make_weight_validates():
    assert make_weight(1, "1/2") == make_point(1, "1/2")
    with pytest.raises(UsageError):
        make_weight(0, 0)
    with pytest.raises(UsageError):
        make_weight(-1, 2)


def test_lex_key_orders_ties_by_objectives():
    weight = make_weight(1, 1)
    assert lex_key(weight, make_point(1, 2)) < lex_key(weight, make_point(2, 1))


def test_explicit_oracle_weighted_sum_returns_first_minimizer():
    points = [make_point(2, 0), make_point(1, 1), make_point(0, 2)]
    oracle = ExplicitOracle(points)
    result = oracle.weighted_sum(make_weight(1, 1))
    assert result.point == make_point(2, 0)
    assert result.solution == (1, 0, 0)


def test_explicit_oracle_lex_weighted_sum_breaks_ties_lexicographically():
    points = [make_point(2, 0), make_point(1, 1), make_point(0, 2)]
    oracle = ExplicitOracle(points)
    assert oracle.lex_weighted_sum(make_weight(1, 1)).point == make_point(0, 2)
    assert oracle.lex_weighted_sum(make_weight(1, 0)).point == make_point(0, 2)
    assert oracle.lex_weighted_sum(make_weight(0, 1)).point == make_point(2, 0)


def test_explicit_oracle_eps_constraint_bound_is_strict(eps_points):
    oracle = ExplicitOracle(eps_points)
    assert oracle.eps_constraint(None).point == make_point(3, 1)
    assert oracle.eps_constraint(make_point(3)[0]).point == make_point(2, 2)
    assert oracle.eps_constraint(make_point(2)[0]).point == make_point(1, 3)
    with pytest.raises(InfeasibleError):
        oracle.eps_constraint(make_point(1)[0])


def test_explicit_oracle_on_empty_set_is_infeasible():
    oracle = ExplicitOracle([])
    with pytest.raises(InfeasibleError):
        oracle.weighted_sum(make_weight(1, 1))
    with pytest.raises(InfeasibleError):
        oracle.eps_constraint(None)


def test_explicit_oracle_needs_one_solution_per_point():
    with pytest.raises(UsageError):
        ExplicitOracle([make_point(1, 1)], [(1,), (0,)])


def test_counting_oracle_counts_each_kind(five_points):
    counter = CallCounter()
    oracle = CountingOracle(ExplicitOracle(five_points), counter)
    oracle.weighted_sum(make_weight(1, 1))
    oracle.lex_weighted_sum(make_weight(1, 1))
    oracle.lex_weighted_sum(make_weight(1, 0))
    oracle.eps_constraint(None)
    assert (counter.ws, counter.lex, counter.eps, counter.total) == (1, 2, 1, 4)


def test_d2_solves_are_not_oracle_calls():
    counter = CallCounter()
    counter.tick("lex")
    counter.tick("d2")
    counter.tick("d2")
    assert (counter.lex, counter.d2, counter.total) == (1, 2, 1)


def test_enumeration_log_snapshots_counters():
    log = EnumerationLog()
    log.counter.tick("lex")
    first = log.record(make_point(0, 1))
    log.counter.tick("lex")
    log.counter.tick("lex")
    second = log.record(make_point(1, 0))
    assert (first.index, first.lex_calls) == (1, 1)
    assert (second.index, second.lex_calls) == (2, 3)
    assert log.interemission_calls("lex") == [1, 2]
    assert log.max_interemission_calls("lex") == 2
    assert log.max_interemission_calls("eps") == 0
    assert log.points == [make_point(0, 1), make_point(1, 0)]


def test_enumeration_log_retain_keeps_high_water_mark():
    log = EnumerationLog()
    log.retain(3)
    log.retain(1)
    assert log.max_retained == 3
