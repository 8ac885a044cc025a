"""Data models for problem instances, LP results, run configuration and the
algorithm registry."""

from collections import defaultdict
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple, Type, TypeVar

from pydantic import (
    BaseModel,
    ConfigDict,
    ValidationError,
    computed_field,
    field_validator,
    model_validator,
)

from .exceptions import RegistryError, UsageError
from .utils import to_fractions

M = TypeVar("M", bound="ExactModel")

Vector = Tuple[Fraction, ...]
Matrix = Tuple[Vector, ...]


class ExactModel(BaseModel):
    """Immutable model whose numeric fields are exact Fractions."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @classmethod
    def create(cls: Type[M], **data: Any) -> M:
        """Validate data into a model, reporting failures as UsageError."""
        try:
            return cls(**data)
        except ValidationError as e:
            raise UsageError(f"Invalid {cls.__name__}: {e}") from e


def _vector(value: Any) -> Vector:
    return to_fractions(value)


def _matrix(value: Any) -> Matrix:
    return tuple(to_fractions(row) for row in value)


class LPInstance(ExactModel):
    """Multiobjective linear program min Cx subject to Ax ≥ b, x free.

    Attributes:
        A: m x n constraint matrix.
        b: Right hand side of length m.
        C: d x n objective matrix.
    """

    A: Matrix
    b: Vector
    C: Matrix

    @field_validator("A", "C", mode="before")
    @classmethod
    def _coerce_matrix(cls, value):
        return _matrix(value)

    @field_validator("b", mode="before")
    @classmethod
    def _coerce_vector(cls, value):
        return _vector(value)

    @model_validator(mode="after")
    def check_dimensions(self):
        if not self.C:
            raise ValueError("C needs at least one objective row.")
        n = len(self.C[0])
        if any(len(row) != n for row in self.C):
            raise ValueError("All rows of C must have the same length.")
        if len(self.A) != len(self.b):
            raise ValueError(
                f"A has {len(self.A)} rows but b has {len(self.b)} entries."
            )
        if any(len(row) != n for row in self.A):
            raise ValueError(f"All rows of A must have n = {n} columns.")
        return self

    @property
    def m(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return len(self.C[0])

    @property
    def d(self) -> int:
        return len(self.C)

    def with_constraints(self, rows: List[Vector], rhs: List[Fraction]) -> "LPInstance":
        """Return a copy with the extra constraints rows·x ≥ rhs appended."""
        return LPInstance(A=self.A + tuple(rows), b=self.b + tuple(rhs), C=self.C)

    def with_equality(self, row: Vector, rhs: Fraction) -> "LPInstance":
        """Return a copy with row·x = rhs appended as a pair of inequalities."""
        negated = tuple(-a for a in row)
        return self.with_constraints([tuple(row), negated], [rhs, -rhs])


class LPStatus(str, Enum):
    optimal = "optimal"
    infeasible = "infeasible"
    unbounded = "unbounded"


class LPOutcome(ExactModel):
    """Result of a single or lexicographic LP solve."""

    status: LPStatus
    solution: Optional[Vector] = None
    value: Optional[Fraction] = None

    @model_validator(mode="after")
    def check_optimal_payload(self):
        has_payload = self.solution is not None and self.value is not None
        if has_payload != (self.status == LPStatus.optimal):
            raise ValueError("solution and value are set iff the status is optimal.")
        return self


class DualPair(ExactModel):
    """A feasible point (u, λ) of the dual program D₂(y)."""

    u: Vector
    lam: Tuple[Fraction, Fraction]

    @field_validator("u", "lam", mode="before")
    @classmethod
    def _coerce(cls, value):
        return _vector(value)

    @model_validator(mode="after")
    def check_simplex(self):
        if any(x < 0 for x in self.u + self.lam):
            raise ValueError("u and λ must be nonnegative.")
        if sum(self.lam) != 1:
            raise ValueError(f"λ must sum to 1, got {sum(self.lam)}.")
        return self


def _cost_pair(value: Any) -> Tuple[Fraction, Fraction]:
    cost = _vector(value)
    if len(cost) != 2:
        raise ValueError(f"Costs are 2-D, got {len(cost)} components.")
    if any(c < 0 for c in cost):
        raise ValueError(f"Costs must be nonnegative, got {cost}.")
    return cost  # type: ignore[return-value]


class Arc(ExactModel):
    tail: int
    head: int
    cost: Tuple[Fraction, Fraction]

    @field_validator("cost", mode="before")
    @classmethod
    def _coerce_cost(cls, value):
        return _cost_pair(value)


class Edge(ExactModel):
    u: int
    v: int
    cost: Tuple[Fraction, Fraction]

    @field_validator("cost", mode="before")
    @classmethod
    def _coerce_cost(cls, value):
        return _cost_pair(value)


class CostDigraph(ExactModel):
    """Directed graph with 2-D nonnegative arc costs and an s-t pair."""

    node_count: int
    arcs: Tuple[Arc, ...]
    source: int
    sink: int

    @model_validator(mode="after")
    def check_graph(self):
        nodes = range(self.node_count)
        for arc in self.arcs:
            if arc.tail not in nodes or arc.head not in nodes:
                raise ValueError(f"Arc {arc.tail}->{arc.head} has a node out of range.")
        if self.source not in nodes or self.sink not in nodes:
            raise ValueError("Source and sink must be nodes of the graph.")
        if self.source == self.sink:
            raise ValueError("Source and sink must differ.")
        return self


class CostGraph(ExactModel):
    """Undirected graph with 2-D nonnegative edge costs."""

    node_count: int
    edges: Tuple[Edge, ...]

    @model_validator(mode="after")
    def check_graph(self):
        nodes = range(self.node_count)
        for edge in self.edges:
            if edge.u not in nodes or edge.v not in nodes:
                raise ValueError(f"Edge {edge.u}-{edge.v} has a node out of range.")
            if edge.u == edge.v:
                raise ValueError(f"Self-loop at node {edge.u}.")
        return self


class UnconstrainedBi(ExactModel):
    """min (c1ᵀx, c2ᵀx) over x ∈ {0,1}ⁿ.

    The subset-sum form has c1 = c ∈ Nⁿ and c2 = -c; build it with ``from_weights``.
    """

    c1: Vector
    c2: Vector

    @field_validator("c1", "c2", mode="before")
    @classmethod
    def _coerce(cls, value):
        return _vector(value)

    @model_validator(mode="after")
    def check_lengths(self):
        if len(self.c1) != len(self.c2):
            raise ValueError("c1 and c2 must have the same length.")
        return self

    @classmethod
    def from_weights(cls, c: Any) -> "UnconstrainedBi":
        """The (cᵀx, -cᵀx) instance of a nonnegative integer vector c."""
        values = to_fractions(c)
        if any(v < 0 or v.denominator != 1 for v in values):
            raise UsageError(f"Expected nonnegative integers, got {c}.")
        return cls(c1=values, c2=tuple(-v for v in values))

    @property
    def n(self) -> int:
        return len(self.c1)


class KPInstance(ExactModel):
    """Knapsack decision instance: is there x with c1ᵀx ≤ k1 and c2ᵀx ≥ k2?"""

    c1: Tuple[int, ...]
    c2: Tuple[int, ...]
    k1: int
    k2: int

    @model_validator(mode="after")
    def check_restrictions(self):
        if len(self.c1) != len(self.c2) or not self.c1:
            raise ValueError("c1 and c2 must be nonempty and of equal length.")
        if any(c <= 0 for c in self.c1 + self.c2) or self.k1 <= 0 or self.k2 <= 0:
            raise ValueError("All knapsack data must be positive integers.")
        if sum(self.c1) <= self.k1:
            raise ValueError(f"Need 1ᵀc1 = {sum(self.c1)} > k1 = {self.k1}.")
        if sum(self.c2) <= self.k2:
            raise ValueError(f"Need 1ᵀc2 = {sum(self.c2)} > k2 = {self.k2}.")
        return self

    @property
    def n(self) -> int:
        return len(self.c1)


class Caps(BaseModel):
    """Size caps for exhaustive enumeration. Exceeding one is an error."""

    model_config = ConfigDict(frozen=True)

    nodes_path: int = 8
    nodes_tree: int = 6
    nodes_cut: int = 16
    n_subsets: int = 16
    lp_size: int = 14

    @model_validator(mode="after")
    def check_positive(self):
        for name, value in self:
            if value <= 0:
                raise ValueError(f"Cap '{name}' must be positive, got {value}.")
        return self


class Command(str, Enum):
    extremes = "extremes"
    front = "front"
    lp_extremes = "lp-extremes"
    generate_gadget = "generate-gadget"
    brute = "brute"
    bench_delay = "bench-delay"


class OutputFormat(str, Enum):
    ndjson = "ndjson"
    table = "table"


class ProblemKind(str, Enum):
    """What an input instance is read as."""

    points = "points"
    path = "path"
    tree = "tree"
    cut = "cut"
    subset = "subset"
    lp = "lp"


class AlgorithmSpec(BaseModel):
    """Information about a registered enumerator.

    Attributes:
        name: Name used on the command line, e.g. 'da-lex'.
        func: The enumerator.
        commands: The commands the enumerator may run under.
        kinds: The problem kinds the enumerator accepts.
        streams: Whether the enumerator emits points while it runs.
        oracle: Whether the enumerator consumes a scalarization oracle rather than
            the instance itself.
    """

    name: str
    func: Callable
    commands: List[Command]
    kinds: List[ProblemKind]
    streams: bool = True
    oracle: bool = True


class AlgorithmRegistry(BaseModel):
    """Registry for enumerators."""

    registry: Dict[str, AlgorithmSpec] = {}
    by_command: Dict[Command, List[str]] = defaultdict(list)

    def register(self, spec: AlgorithmSpec) -> None:
        if spec.name in self.registry:
            raise RegistryError(f"Algorithm '{spec.name}' is already registered.")
        self.registry[spec.name] = spec
        for command in spec.commands:
            self.by_command[command].append(spec.name)

    def get_algorithm(self, name: str) -> AlgorithmSpec:
        try:
            return self.registry[name]
        except KeyError:
            raise RegistryError(f"No algorithm registered as '{name}'.") from None

    def supported_algorithms(self, command: Optional[Command] = None) -> List[str]:
        if command is None:
            return list(self.registry)
        return list(self.by_command.get(command, []))


registry = AlgorithmRegistry()

DEFAULT_ALGORITHMS = {
    Command.extremes: "da-lex",
    Command.front: "eps-sweep",
    Command.lp_extremes: "bilp-walk",
    Command.bench_delay: "da-polydelay",
}


class RunConfig(BaseModel):
    """Everything one CLI invocation needs."""

    model_config = ConfigDict(frozen=True)

    command: Command
    algorithm: Optional[str] = None
    input: Optional[Path] = None
    output_format: OutputFormat = OutputFormat.ndjson
    problem: Optional[ProblemKind] = None
    caps: Caps = Caps()
    seed: int = 0
    runs: int = 100
    size: int = 50
    report: Optional[Path] = None
    timing: bool = False

    @model_validator(mode="before")
    @classmethod
    def default_algorithm(cls, data: Any):
        if isinstance(data, dict) and data.get("algorithm") is None:
            command = data.get("command")
            if command is not None:
                data = {**data, "algorithm": DEFAULT_ALGORITHMS.get(Command(command))}
        return data

    @model_validator(mode="after")
    def check_algorithm(self):
        if self.runs <= 0 or self.size <= 0:
            raise ValueError("--runs and --size must be positive.")
        if self.algorithm is None:
            if self.command in DEFAULT_ALGORITHMS:
                raise ValueError(f"Command '{self.command.value}' needs an algorithm.")
            return self
        if self.command not in DEFAULT_ALGORITHMS:
            raise ValueError(
                f"Command '{self.command.value}' does not take an --algorithm."
            )
        allowed = registry.supported_algorithms(self.command)
        if self.algorithm not in allowed:
            raise ValueError(
                f"Algorithm '{self.algorithm}' is not valid for command "
                f"'{self.command.value}'. Choose one of {allowed}."
            )
        return self

    @property
    def spec(self) -> AlgorithmSpec:
        if self.algorithm is None:
            raise RegistryError(f"Command '{self.command.value}' has no algorithm.")
        return registry.get_algorithm(self.algorithm)


def algorithm(
    name: str,
    *,
    commands: List[Command],
    kinds: List[ProblemKind],
    streams: bool = True,
    oracle: bool = True,
):
    """Decorator to register a function as an enumerator.

    Args:
        name: The name the enumerator is selected by on the command line.
        commands: The commands the enumerator may run under.
        kinds: The problem kinds the enumerator accepts.
        streams: True if the enumerator yields points while it runs, False if it
            returns its result only at the end.
        oracle: False if the enumerator takes the parsed instance instead of an
            oracle built from it.
    """

    def decorator(func):
        registry.register(
            AlgorithmSpec(
                name=name,
                func=func,
                commands=commands,
                kinds=kinds,
                streams=streams,
                oracle=oracle,
            )
        )
        return func

    return decorator


class EmissionRecord(BaseModel):
    """One streamed output line: an emitted point and the calls made so far."""

    i: int
    point: List[str]
    ws_calls: int
    lex_calls: int
    eps_calls: int
    t_mono_ns: Optional[int] = None


class RunSummary(BaseModel):
    """Final output line of a run."""

    count: int
    total_calls: int
    max_interemission_lex_calls: int
    ws_calls: int
    lex_calls: int
    eps_calls: int
    max_retained: Optional[int] = None
    d2_solves: Optional[int] = None


class DelayRun(BaseModel):
    """Delay counters of one benchmark instance."""

    run: int
    count: int
    total_calls: int
    max_interemission_calls: int
    passed: bool


class DelayReport(BaseModel):
    """Verdict of a delay benchmark over several instances.

    Attributes:
        algorithm: The enumerator under test.
        check: The delay property checked on every run.
        seed: Seed of the instance generator.
        runs: Per-instance counters.
    """

    algorithm: str
    check: str
    seed: int
    runs: List[DelayRun]

    @property
    def passed(self) -> bool:
        return all(run.passed for run in self.runs)

    @computed_field  # type: ignore[misc]
    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"
