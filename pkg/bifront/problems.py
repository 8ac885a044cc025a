"""Concrete biobjective problems and their scalarization oracles.

Shortest s-t paths and spanning trees get polynomial weighted-sum and lexicographic
oracles; their ε-constraint questions fall back on exhaustive enumeration, as does
everything about global cuts. Also here: the merge enumerator for unconstrained
problems over {0,1}ⁿ and the knapsack gadget whose Pareto-front is hard to certify.
"""

import logging
import random
from fractions import Fraction
from heapq import heappop, heappush
from itertools import count
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx
from networkx.utils import UnionFind

from .brute import ExplicitOracle, brute_oracle, enumerate_solutions
from .core import BiFront, Point, Weight, merge_fronts
from .exceptions import InfeasibleError
from .models import (
    Arc,
    Caps,
    Command,
    CostDigraph,
    CostGraph,
    Edge,
    KPInstance,
    ProblemKind,
    UnconstrainedBi,
    algorithm,
)
from .oracles import (
    EnumerationLog,
    OracleResult,
    ScalarizationOracle,
    check_weight,
    lex_key,
)

logger = logging.getLogger(__name__)

ZERO = Fraction(0)

# Either a scalar ℓᵀc or a triple (ℓᵀc, c1, c2) compared lexicographically.
CostKey = Union[Fraction, Tuple[Fraction, Fraction, Fraction]]


def _add_keys(a: CostKey, b: CostKey) -> CostKey:
    if isinstance(a, tuple):
        return tuple(x + y for x, y in zip(a, b))  # type: ignore[arg-type]
    return a + b  # type: ignore[operator]


def _key_function(weight: Weight, lexicographic: bool) -> Callable[[Point], CostKey]:
    check_weight(weight)
    if lexicographic:
        return lambda cost: lex_key(weight, cost)
    return lambda cost: weight[0] * cost[0] + weight[1] * cost[1]


def _indicator(chosen: Sequence[int], length: int) -> Tuple[int, ...]:
    members = set(chosen)
    return tuple(1 if i in members else 0 for i in range(length))


def _image(costs: Sequence[Point], chosen: Sequence[int]) -> Point:
    return (
        sum((costs[i][0] for i in chosen), ZERO),
        sum((costs[i][1] for i in chosen), ZERO),
    )


class _EnumeratedEps:
    """Mixin answering ε-constraint questions by exhaustive enumeration."""

    kind: ProblemKind
    caps: Caps
    _explicit: Optional[ExplicitOracle] = None

    def _instance(self):
        raise NotImplementedError

    def eps_constraint(self, bound: Optional[Fraction]) -> OracleResult:
        if self._explicit is None:
            self._explicit = brute_oracle(self._instance(), self.kind, self.caps)
        return self._explicit.eps_constraint(bound)


class PathOracle(_EnumeratedEps, ScalarizationOracle):
    """Oracles for biobjective shortest s-t paths.

    Solutions are arc indicator vectors. Parallel arcs are distinct solutions.
    """

    kind = ProblemKind.path

    def __init__(self, g: CostDigraph, caps: Optional[Caps] = None):
        self.g = g
        self.caps = caps or Caps()
        self._out: Dict[int, List[int]] = {v: [] for v in range(g.node_count)}
        for i, arc in enumerate(g.arcs):
            self._out[arc.tail].append(i)

    def _instance(self):
        return self.g

    def _shortest_path(
        self, key: Callable[[Point], CostKey], zero: CostKey
    ) -> List[int]:
        """Label-setting search from source to sink; returns the arcs of the path."""
        arcs = self.g.arcs
        settled: Dict[int, CostKey] = {}
        via: Dict[int, Optional[int]] = {}
        best: Dict[int, CostKey] = {self.g.source: zero}
        c = count()
        fringe = [(zero, next(c), self.g.source, None)]
        while fringe:
            d, _, v, arc_in = heappop(fringe)
            if v in settled:
                continue
            settled[v] = d
            via[v] = arc_in
            if v == self.g.sink:
                break
            for i in self._out[v]:
                u = arcs[i].head
                if u in settled:
                    continue
                vu = _add_keys(d, key(arcs[i].cost))
                if u not in best or vu < best[u]:
                    best[u] = vu
                    heappush(fringe, (vu, next(c), u, i))
        if self.g.sink not in settled:
            raise InfeasibleError(
                f"Node {self.g.sink} is unreachable from {self.g.source}."
            )

        path = []
        node = self.g.sink
        while via[node] is not None:
            i = via[node]
            path.append(i)
            node = arcs[i].tail
        path.reverse()
        return path

    def _result(self, path: List[int]) -> OracleResult:
        costs = [arc.cost for arc in self.g.arcs]
        return OracleResult(_indicator(path, len(costs)), _image(costs, path))

    def weighted_sum(self, weight: Weight) -> OracleResult:
        return self._result(self._shortest_path(_key_function(weight, False), ZERO))

    def lex_weighted_sum(self, weight: Weight) -> OracleResult:
        zero = (ZERO, ZERO, ZERO)
        return self._result(self._shortest_path(_key_function(weight, True), zero))


class TreeOracle(_EnumeratedEps, ScalarizationOracle):
    """Oracles for biobjective minimum spanning trees.

    Solutions are edge indicator vectors.
    """

    kind = ProblemKind.tree

    def __init__(self, g: CostGraph, caps: Optional[Caps] = None):
        self.g = g
        self.caps = caps or Caps()

    def _instance(self):
        return self.g

    def _kruskal(self, key: Callable[[Point], CostKey]) -> OracleResult:
        edges = self.g.edges
        order = sorted(range(len(edges)), key=lambda i: (key(edges[i].cost), i))
        forest = UnionFind(range(self.g.node_count))
        chosen = []
        for i in order:
            e = edges[i]
            if forest[e.u] != forest[e.v]:
                forest.union(e.u, e.v)
                chosen.append(i)
        if len(chosen) != self.g.node_count - 1:
            raise InfeasibleError("The graph is disconnected and has no spanning tree.")
        costs = [e.cost for e in edges]
        return OracleResult(_indicator(chosen, len(edges)), _image(costs, chosen))

    def weighted_sum(self, weight: Weight) -> OracleResult:
        return self._kruskal(_key_function(weight, False))

    def lex_weighted_sum(self, weight: Weight) -> OracleResult:
        return self._kruskal(_key_function(weight, True))


class CutOracle(ExplicitOracle):
    """All three scalarizations over every proper 2-partition of a small graph.

    Solutions are node side vectors with node 0 on side 0.
    """

    def __init__(self, g: CostGraph, caps: Optional[Caps] = None):
        self.g = g
        results = enumerate_solutions(g, ProblemKind.cut, caps)
        super().__init__([r.point for r in results], [r.solution for r in results])


def mosp_oracle(g: CostDigraph, caps: Optional[Caps] = None) -> PathOracle:
    """Scalarization oracle for biobjective shortest s-t paths in g."""
    return PathOracle(g, caps)


def most_oracle(g: CostGraph, caps: Optional[Caps] = None) -> TreeOracle:
    """Scalarization oracle for biobjective minimum spanning trees of g."""
    return TreeOracle(g, caps)


def mincut_eps_oracle(g: CostGraph, caps: Optional[Caps] = None) -> CutOracle:
    """Scalarization oracle for biobjective global min-cut by exhaustive enumeration.

    Raises:
        CapacityError: If g has more nodes than the cut cap.
    """
    return CutOracle(g, caps)


def unconstrained_front(instance: UnconstrainedBi) -> Iterator[BiFront]:
    """Yield the fronts of the prefix problems over x₁..xᵢ, i = 0..n.

    Each front is the Pareto merge of the previous one with its copy translated by
    item i's cost vector.
    """
    front = BiFront([(ZERO, ZERO)])
    yield front
    for i, (a, b) in enumerate(zip(instance.c1, instance.c2), start=1):
        shifted = [(p[0] + a, p[1] + b) for p in front]
        front = merge_fronts(front, shifted)
        logger.debug("Prefix front %d has %d points.", i, len(front))
        yield front


def subsetsum_front(c: Sequence[int]) -> Iterator[BiFront]:
    """Yield the fronts F₀..Fₙ of min (cᵀx, -cᵀx) over x ∈ {0,1}ⁿ.

    Every point of this problem is nondominated, so with all cᵢ > 0 each front
    strictly contains the one before.

    Raises:
        UsageError: If c has a negative or non-integer entry.
    """
    return unconstrained_front(UnconstrainedBi.from_weights(c))


@algorithm(
    "prop1-merge",
    commands=[Command.front],
    kinds=[ProblemKind.subset],
    streams=False,
    oracle=False,
)
def merge_front(
    instance: UnconstrainedBi, log: Optional[EnumerationLog] = None
) -> BiFront:
    """Pareto-front of an unconstrained problem by prefix merging."""
    log = log if log is not None else EnumerationLog()
    front = BiFront()
    for front in unconstrained_front(instance):
        log.iterations += 1
        log.retain(len(front))
    for point in front:
        log.record(point)
    return front


def kp_to_mosp(kp: KPInstance) -> Tuple[CostDigraph, Tuple[Point, Point]]:
    """Build the shortest-path gadget of a knapsack instance.

    A chain of n diamonds encodes x ∈ {0,1}ⁿ: taking item i costs (c1ᵢ, 0),
    skipping it costs (0, c2ᵢ). Two extra s-t routes produce the points of M.
    The front of the gadget is exactly M iff no x has c1ᵀx ≤ k1 and c2ᵀx ≥ k2.

    Nodes are numbered v¹ᵢ = 2(i-1), v²ᵢ = 2(i-1)+1, v¹ₙ₊₁ = 2n and
    v = 2n+1, so the source is 0 and the sink is 2n.

    Returns:
        The gadget and M = ((k1+1, 0), (0, 1ᵀc2 - k2 + 1)).
    """
    n = kp.n
    arcs: List[Arc] = []
    for i in range(n):
        top, side, following = 2 * i, 2 * i + 1, 2 * i + 2
        arcs.append(Arc(tail=top, head=side, cost=(kp.c1[i], 0)))
        arcs.append(Arc(tail=top, head=following, cost=(0, kp.c2[i])))
        arcs.append(Arc(tail=side, head=following, cost=(0, 0)))
    source, sink, detour = 0, 2 * n, 2 * n + 1
    skip_all = sum(kp.c2) - kp.k2 + 1
    arcs.append(Arc(tail=source, head=sink, cost=(kp.k1 + 1, 0)))
    arcs.append(Arc(tail=source, head=detour, cost=(0, skip_all)))
    arcs.append(Arc(tail=detour, head=sink, cost=(0, 0)))

    g = CostDigraph(node_count=2 * n + 2, arcs=tuple(arcs), source=source, sink=sink)
    m_points = (
        (Fraction(kp.k1 + 1), ZERO),
        (ZERO, Fraction(skip_all)),
    )
    return g, m_points


def is_outerplanar(g: Union[CostDigraph, CostGraph]) -> bool:
    """True iff the underlying simple graph of g is outerplanar.

    A graph is outerplanar iff adding one apex joined to every node keeps it planar.
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(g.node_count))
    if isinstance(g, CostDigraph):
        graph.add_edges_from((a.tail, a.head) for a in g.arcs)
    else:
        graph.add_edges_from((e.u, e.v) for e in g.edges)
    apex = g.node_count
    graph.add_edges_from((apex, v) for v in range(g.node_count))
    planar, _ = nx.check_planarity(graph)
    return planar


def _random_rational(rng: random.Random, bound: int) -> Fraction:
    denominator = rng.choice((1, 1, 2, 3))
    return Fraction(rng.randint(0, bound * denominator), denominator)


def random_point_set(rng: random.Random, size: int, bound: int = 20) -> List[Point]:
    """Random 2-D points with small nonnegative rational coordinates.

    Repeats are allowed.
    """
    return [
        (_random_rational(rng, bound), _random_rational(rng, bound))
        for _ in range(size)
    ]


def _random_cost(rng: random.Random, bound: int) -> Tuple[int, int]:
    return (rng.randint(0, bound), rng.randint(0, bound))


def random_digraph(
    rng: random.Random, node_count: int, density: float = 0.4, bound: int = 9
) -> CostDigraph:
    """Random digraph with source 0 and sink node_count - 1.

    The arcs i -> i+1 are always present, so the sink is reachable.
    """
    skeleton = nx.gnp_random_graph(
        node_count, density, seed=rng.randrange(2**32), directed=True
    )
    pairs = set(skeleton.edges()) | {(i, i + 1) for i in range(node_count - 1)}
    arcs = tuple(
        Arc(tail=u, head=v, cost=_random_cost(rng, bound)) for u, v in sorted(pairs)
    )
    return CostDigraph(node_count=node_count, arcs=arcs, source=0, sink=node_count - 1)


def random_graph(
    rng: random.Random, node_count: int, density: float = 0.5, bound: int = 9
) -> CostGraph:
    """Random connected undirected graph.

    Every node v > 0 is joined to a random earlier node before extra edges are drawn.
    """
    skeleton = nx.gnp_random_graph(node_count, density, seed=rng.randrange(2**32))
    skeleton.add_edges_from((v, rng.randrange(v)) for v in range(1, node_count))
    pairs = sorted(tuple(sorted(e)) for e in skeleton.edges())
    edges = tuple(Edge(u=u, v=v, cost=_random_cost(rng, bound)) for u, v in pairs)
    return CostGraph(node_count=node_count, edges=edges)


def random_kp(rng: random.Random, n: int, bound: int = 9) -> KPInstance:
    """Random knapsack instance meeting 1ᵀc1 > k1 and 1ᵀc2 > k2."""
    c1 = [rng.randint(1, bound) for _ in range(n)]
    c2 = [rng.randint(1, bound) for _ in range(n)]
    # Both sums must exceed some positive k
    c1[0] = max(c1[0], 2)
    c2[0] = max(c2[0], 2)
    return KPInstance(
        c1=tuple(c1),
        c2=tuple(c2),
        k1=rng.randint(1, sum(c1) - 1),
        k2=rng.randint(1, sum(c2) - 1),
    )
