from fractions import Fraction

import pytest
from pydantic import ValidationError

import bifront.main  # noqa: F401 Registers the enumerators
from bifront.exceptions import RegistryError, UsageError
from bifront.models import (
    AlgorithmSpec,
    Caps,
    Command,
    DelayReport,
    DelayRun,
    DualPair,
    KPInstance,
    LPInstance,
    LPOutcome,
    LPStatus,
    RunConfig,
    UnconstrainedBi,
    registry,
)


def test_lp_instance_coerces_to_fractions():
    lp = LPInstance(A=[["1/2", 1]], b=[0], C=[[1, 0], [0, 1]])
    assert lp.A[0][0] == Fraction(1, 2)
    assert (lp.m, lp.n, lp.d) == (1, 2, 2)


def test_lp_instance_checks_dimensions():
    with pytest.raises(ValidationError):
        LPInstance(A=[[1, 2]], b=[0, 1], C=[[1, 0]])
    with pytest.raises(UsageError):
        LPInstance.create(A=[[1]], b=[0], C=[[1, 0]])


def test_lp_instance_rejects_floats():
    with pytest.raises(UsageError):
        LPInstance(A=[[0.5]], b=[0], C=[[1]])


def test_with_equality_adds_two_rows():
    lp = LPInstance(A=[[1, 0]], b=[0], C=[[1, 1]])
    pinned = lp.with_equality((1, 1), Fraction(2))
    assert pinned.m == 3
    assert pinned.A[1:] == ((1, 1), (-1, -1))
    assert pinned.b[1:] == (2, -2)


def test_lp_outcome_payload_matches_status():
    assert LPOutcome(status=LPStatus.infeasible).solution is None
    with pytest.raises(ValidationError):
        LPOutcome(status=LPStatus.optimal)


def test_dual_pair_lambda_sums_to_one():
    DualPair(u=[0, 1], lam=["1/2", "1/2"])
    with pytest.raises(ValidationError):
        DualPair(u=[0], lam=[1, 1])


def test_kp_instance_restrictions():
    KPInstance(c1=(1, 2), c2=(2, 3), k1=2, k2=3)
    with pytest.raises(ValidationError):
        KPInstance(c1=(1, 2), c2=(2, 3), k1=3, k2=3)
    with pytest.raises(ValidationError):
        KPInstance(c1=(0, 2), c2=(2, 3), k1=1, k2=3)


def test_unconstrained_from_weights():
    instance = UnconstrainedBi.from_weights([1, 2])
    assert instance.c2 == (-1, -2)
    assert instance.n == 2
    with pytest.raises(UsageError):
        UnconstrainedBi.from_weights([1, -2])


def test_caps_defaults_and_validation():
    caps = Caps()
    assert (caps.nodes_path, caps.nodes_tree, caps.nodes_cut) == (8, 6, 16)
    assert (caps.n_subsets, caps.lp_size) == (16, 14)
    with pytest.raises(ValidationError):
        Caps(nodes_cut=0)


def test_registry_holds_every_enumerator():
    assert set(registry.supported_algorithms()) >= {
        "da-plain",
        "da-lex",
        "da-polydelay",
        "eps-sweep",
        "bilp-walk",
        "prop1-merge",
    }
    assert registry.supported_algorithms(Command.lp_extremes) == ["bilp-walk"]
    assert isinstance(registry.get_algorithm("da-lex"), AlgorithmSpec)
    with pytest.raises(RegistryError):
        registry.get_algorithm("simplex-magic")


def test_registry_rejects_duplicate_names():
    spec = registry.get_algorithm("da-lex")
    with pytest.raises(RegistryError):
        registry.register(spec)


@pytest.mark.parametrize(
    "command,algorithm",
    [
        ("extremes", "da-lex"),
        ("front", "eps-sweep"),
        ("lp-extremes", "bilp-walk"),
        ("bench-delay", "da-polydelay"),
    ],
)
def test_run_config_fills_default_algorithm(command, algorithm):
    assert RunConfig(command=command).algorithm == algorithm


def test_run_config_checks_algorithm_against_command():
    assert RunConfig(command="front", algorithm="prop1-merge").spec.streams is False
    with pytest.raises(ValidationError):
        RunConfig(command="extremes", algorithm="bilp-walk")
    with pytest.raises(ValidationError):
        RunConfig(command="bench-delay", algorithm="da-plain")
    with pytest.raises(ValidationError):
        RunConfig(command="brute", algorithm="da-lex")


def test_run_config_without_algorithm():
    config = RunConfig(command="generate-gadget")
    assert config.algorithm is None
    with pytest.raises(RegistryError):
        config.spec


def test_delay_report_verdict():
    runs = [
        DelayRun(
            run=1, count=3, total_calls=4, max_interemission_calls=1, passed=True
        ),
        DelayRun(
            run=2, count=3, total_calls=9, max_interemission_calls=5, passed=False
        ),
    ]
    report = DelayReport(algorithm="eps-sweep", check="c", seed=0, runs=runs)
    assert not report.passed
    assert report.verdict == "FAIL"
    assert report.model_dump()["verdict"] == "FAIL"
