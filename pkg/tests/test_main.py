import pytest

from bifront.core import make_point
from bifront.exceptions import EmptyFrontError, UsageError
from bifront.main import (
    bench,
    build_oracle,
    delay_run,
    emission_record,
    generate_gadget,
    resolve_kind,
    run_algorithm,
    run_brute,
    run_summary,
)
from bifront.models import Caps, Command, ProblemKind, RunConfig
from bifront.oracles import EnumerationLog


def config(command, input=None, **kwargs):
    return RunConfig(command=command, input=input, **kwargs)


def test_run_algorithm_da_lex_on_five_points(test_data_dir):
    log = EnumerationLog()
    events = list(
        run_algorithm(config("extremes", test_data_dir / "five_points.txt"), log)
    )
    assert [e.index for e in events] == [1, 2, 3, 4]
    summary = run_summary(log)
    assert (summary.count, summary.lex_calls, summary.total_calls) == (4, 7, 7)
    assert summary.max_interemission_lex_calls == 2
    assert summary.max_retained is None


def test_run_algorithm_streams_lazily(test_data_dir):
    log = EnumerationLog()
    events = run_algorithm(config("extremes", test_data_dir / "five_points.txt"), log)
    first = next(events)
    assert first.point == make_point(0, 4)
    assert log.counter.lex == 1


def test_run_algorithm_prop1_merge(test_data_dir):
    events = list(
        run_algorithm(
            config("front", test_data_dir / "subset_sum.txt", algorithm="prop1-merge")
        )
    )
    assert len(events) == 4


def test_run_algorithm_lp_walk(test_data_dir):
    log = EnumerationLog()
    cfg = config("lp-extremes", test_data_dir / "triangle.lp")
    events = list(run_algorithm(cfg, log))
    assert [e.point for e in events] == [make_point(2, 0), make_point(0, 2)]
    assert run_summary(log, retained=True).max_retained <= 3


def test_run_algorithm_front_on_undirected_graph_reads_cuts(test_data_dir):
    events = list(run_algorithm(config("front", test_data_dir / "triangle.graph")))
    assert [e.point for e in events] == [
        make_point(6, 3),
        make_point(5, 5),
        make_point(3, 6),
    ]
    assert events[-1].eps_calls == 3


def test_run_algorithm_rejects_kind_mismatch(test_data_dir):
    with pytest.raises(UsageError):
        list(run_algorithm(config("extremes", test_data_dir / "triangle.lp")))
    with pytest.raises(UsageError):
        list(
            run_algorithm(
                config("extremes", test_data_dir / "diamond.graph", problem="cut")
            )
        )


def test_run_algorithm_needs_an_existing_input(tmp_path):
    with pytest.raises(UsageError):
        list(run_algorithm(config("extremes")))
    with pytest.raises(UsageError):
        list(run_algorithm(config("extremes", tmp_path / "missing.txt")))


def test_run_algorithm_on_empty_points(test_data_dir):
    with pytest.raises(EmptyFrontError):
        list(run_algorithm(config("extremes", test_data_dir / "empty.txt")))


def test_resolve_kind(diamond_digraph, cut_triangle, five_points):
    assert resolve_kind(five_points, None, Command.extremes) == ProblemKind.points
    assert resolve_kind(diamond_digraph, None, Command.front) == ProblemKind.path
    assert resolve_kind(cut_triangle, None, Command.extremes) == ProblemKind.tree
    assert resolve_kind(cut_triangle, None, Command.front) == ProblemKind.cut
    assert (
        resolve_kind(cut_triangle, ProblemKind.cut, Command.extremes) == ProblemKind.cut
    )


def test_build_oracle_rejects_lp(triangle_lp):
    with pytest.raises(UsageError):
        build_oracle(triangle_lp, ProblemKind.lp, Caps())


def test_run_brute(test_data_dir):
    front = run_brute(config("brute", test_data_dir / "diamond.graph"))
    assert front == [make_point(0, 4), make_point(1, 2), make_point(4, 0)]
    lp_front = run_brute(config("brute", test_data_dir / "staircase.lp"))
    assert len(lp_front) == 4


def test_generate_gadget_from_file(test_data_dir):
    text = generate_gadget(config("generate-gadget", test_data_dir / "kp_yes.txt"))
    assert text == (test_data_dir / "kp_yes_gadget.graph").read_text()
    assert text.splitlines()[-1] == "M: (3,0) (0,3)"


def test_generate_gadget_is_seeded():
    first = generate_gadget(config("generate-gadget", seed=5, size=4))
    second = generate_gadget(config("generate-gadget", seed=5, size=4))
    assert first == second
    assert first.startswith("directed 10 15 0 8\n")


def test_generate_gadget_needs_a_knapsack_file(test_data_dir):
    with pytest.raises(UsageError):
        generate_gadget(config("generate-gadget", test_data_dir / "five_points.txt"))


def test_emission_record_timing_is_opt_in(five_points):
    log = EnumerationLog()
    event = log.record(five_points[0])
    assert emission_record(event).t_mono_ns is None
    assert emission_record(event, timing=True).t_mono_ns is not None
    assert emission_record(event).point == ["0", "4"]


@pytest.mark.parametrize("algorithm", ["da-polydelay", "da-lex", "eps-sweep"])
def test_bench_passes_on_random_point_sets(algorithm):
    report = bench(
        config("bench-delay", algorithm=algorithm, seed=2, runs=10, size=30)
    )
    assert report.verdict == "PASS"
    assert len(report.runs) == 10
    assert report.seed == 2


def test_bench_polydelay_max_delay_is_two():
    report = bench(config("bench-delay", seed=0, runs=20, size=50))
    assert max(run.max_interemission_calls for run in report.runs) <= 2
    assert any(run.max_interemission_calls == 2 for run in report.runs)


def test_bench_on_singleton_file(test_data_dir):
    report = bench(
        config("bench-delay", test_data_dir / "singleton.txt", algorithm="da-lex")
    )
    assert report.passed
    assert report.runs[0].total_calls == 2


def test_bench_eps_sweep_counts(test_data_dir):
    report = bench(
        config("bench-delay", test_data_dir / "eps_points.txt", algorithm="eps-sweep")
    )
    assert (report.runs[0].count, report.runs[0].total_calls) == (3, 4)
    assert report.passed


def test_bench_is_deterministic():
    first = bench(config("bench-delay", seed=9, runs=5, size=20))
    second = bench(config("bench-delay", seed=9, runs=5, size=20))
    assert first == second


def test_delay_run_flags_a_slow_enumerator():
    log = EnumerationLog()
    for _ in range(3):
        log.counter.tick("lex")
    log.iterations = 1
    log.record(make_point(0, 1))
    result = delay_run(1, "da-polydelay", log)
    assert not result.passed
    assert result.max_interemission_calls == 3
