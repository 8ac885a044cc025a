"""Exhaustive reference oracles for small instances.

Everything here materializes the whole image set, so each instance kind has a size
cap. Exceeding a cap raises CapacityError; nothing is silently truncated.
"""

import logging
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
from networkx.utils import UnionFind

from .core import (
    BiFront,
    Point,
    Weight,
    hull_extremes_2d,
    pareto_filter,
    weighted_value,
)
from .exceptions import (
    CapacityError,
    InfeasibleError,
    LPError,
    UnboundedError,
    UsageError,
)
from .models import (
    Caps,
    CostDigraph,
    CostGraph,
    ExactModel,
    KPInstance,
    LPInstance,
    LPStatus,
    ProblemKind,
    UnconstrainedBi,
    Vector,
)
from .oracles import OracleResult, ScalarizationOracle, Solution, check_weight, lex_key

logger = logging.getLogger(__name__)

Instance = Union[CostDigraph, CostGraph, UnconstrainedBi, Sequence[Point]]

ZERO = Fraction(0)


class ImageSet(ExactModel):
    """Every image point of an instance, with multiplicity."""

    points: Tuple[Tuple[Fraction, ...], ...]
    origin: str

    @property
    def distinct(self) -> List[Point]:
        return sorted(set(self.points))


class ExplicitOracle(ScalarizationOracle):
    """Scalarization oracle over an explicitly listed set of image points.

    ``weighted_sum`` returns the first minimizer in input order, which need not be
    extreme. The lexicographic and ε-constraint answers are unique.
    """

    def __init__(
        self, points: Sequence[Point], solutions: Optional[Sequence[Solution]] = None
    ):
        if solutions is not None and len(solutions) != len(points):
            raise UsageError("Need exactly one solution per point.")
        self.points = list(points)
        self._solutions = list(solutions) if solutions is not None else None

    @classmethod
    def from_results(cls, results: Iterable[OracleResult]) -> "ExplicitOracle":
        results = list(results)
        return cls([r.point for r in results], [r.solution for r in results])

    def _result(self, i: int) -> OracleResult:
        if self._solutions is not None:
            return OracleResult(self._solutions[i], self.points[i])
        # One-hot selection vector over the listed points
        bits = tuple(1 if k == i else 0 for k in range(len(self.points)))
        return OracleResult(bits, self.points[i])

    def _argmin(self, key, candidates: Iterable[int]) -> OracleResult:
        best = min(candidates, key=key, default=None)
        if best is None:
            raise InfeasibleError("No image point satisfies the scalarization.")
        return self._result(best)

    def weighted_sum(self, weight: Weight) -> OracleResult:
        check_weight(weight)
        return self._argmin(
            lambda i: weighted_value(weight, self.points[i]), range(len(self.points))
        )

    def lex_weighted_sum(self, weight: Weight) -> OracleResult:
        check_weight(weight)
        return self._argmin(
            lambda i: lex_key(weight, self.points[i]), range(len(self.points))
        )

    def eps_constraint(self, bound: Optional[Fraction]) -> OracleResult:
        feasible = (
            i
            for i, p in enumerate(self.points)
            if bound is None or p[0] < bound
        )
        return self._argmin(lambda i: (self.points[i][1], self.points[i][0]), feasible)


def _check_cap(what: str, size: int, cap: int) -> None:
    if size > cap:
        raise CapacityError(what, size, cap)


def _sum_costs(costs: Iterable[Tuple[Fraction, Fraction]]) -> Point:
    total = [ZERO, ZERO]
    for c1, c2 in costs:
        total[0] += c1
        total[1] += c2
    return tuple(total)


def enumerate_paths(g: CostDigraph, caps: Caps) -> List[OracleResult]:
    """All simple s-t paths as arc indicator vectors."""
    _check_cap("Digraph for path enumeration", g.node_count, caps.nodes_path)
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(range(g.node_count))
    for index, arc in enumerate(g.arcs):
        graph.add_edge(arc.tail, arc.head, key=index)
    results = []
    for path in nx.all_simple_edge_paths(graph, g.source, g.sink):
        used = {key for _, _, key in path}
        bits = tuple(1 if i in used else 0 for i in range(len(g.arcs)))
        results.append(OracleResult(bits, _sum_costs(g.arcs[i].cost for i in used)))
    return results


def enumerate_trees(g: CostGraph, caps: Caps) -> List[OracleResult]:
    """All spanning trees as edge indicator vectors."""
    _check_cap("Graph for spanning tree enumeration", g.node_count, caps.nodes_tree)
    results = []
    for chosen in combinations(range(len(g.edges)), g.node_count - 1):
        forest = UnionFind(range(g.node_count))
        acyclic = True
        for i in chosen:
            edge = g.edges[i]
            if forest[edge.u] == forest[edge.v]:
                acyclic = False
                break
            forest.union(edge.u, edge.v)
        if acyclic:
            bits = tuple(1 if i in chosen else 0 for i in range(len(g.edges)))
            cost = _sum_costs(g.edges[i].cost for i in chosen)
            results.append(OracleResult(bits, cost))
    return results


def enumerate_cuts(g: CostGraph, caps: Caps) -> List[OracleResult]:
    """All 2^(n-1) - 1 proper 2-partitions as node side vectors.

    Node 0 is always on side 0, so each partition is listed once.
    """
    _check_cap("Graph for cut enumeration", g.node_count, caps.nodes_cut)
    if g.node_count < 2:
        raise UsageError("A cut needs at least two nodes.")
    results = []
    for tail in product((0, 1), repeat=g.node_count - 1):
        if not any(tail):
            continue
        side = (0,) + tail
        crossing = (e.cost for e in g.edges if side[e.u] != side[e.v])
        results.append(OracleResult(side, _sum_costs(crossing)))
    return results


def enumerate_subsets(instance: UnconstrainedBi, caps: Caps) -> List[OracleResult]:
    """All 2^n solutions of an unconstrained biobjective problem."""
    _check_cap("Unconstrained problem", instance.n, caps.n_subsets)
    results = []
    for bits in product((0, 1), repeat=instance.n):
        point = (
            sum((c for c, x in zip(instance.c1, bits) if x), ZERO),
            sum((c for c, x in zip(instance.c2, bits) if x), ZERO),
        )
        results.append(OracleResult(bits, point))
    return results


def enumerate_solutions(
    instance: Instance, kind: ProblemKind, caps: Optional[Caps] = None
) -> List[OracleResult]:
    """Materialize every feasible solution of an instance with its image point.

    Args:
        instance: A digraph (paths), graph (trees or cuts), unconstrained problem
            (subsets) or an explicit point list (points).
        kind: How to read the instance.
        caps: Size caps; defaults apply when omitted.

    Raises:
        CapacityError: If the instance exceeds the cap for its kind.
        UsageError: If kind does not fit the instance type.
    """
    caps = caps or Caps()
    if kind == ProblemKind.path and isinstance(instance, CostDigraph):
        return enumerate_paths(instance, caps)
    if kind == ProblemKind.tree and isinstance(instance, CostGraph):
        return enumerate_trees(instance, caps)
    if kind == ProblemKind.cut and isinstance(instance, CostGraph):
        return enumerate_cuts(instance, caps)
    if kind == ProblemKind.subset and isinstance(instance, UnconstrainedBi):
        return enumerate_subsets(instance, caps)
    if kind == ProblemKind.points and isinstance(instance, (list, tuple)):
        oracle = ExplicitOracle(instance)
        return [oracle._result(i) for i in range(len(oracle.points))]
    raise UsageError(f"Cannot enumerate a {type(instance).__name__} as '{kind.value}'.")


def enumerate_image(
    instance: Instance, kind: ProblemKind, caps: Optional[Caps] = None
) -> ImageSet:
    """All image points of an instance, duplicates kept."""
    if kind == ProblemKind.points and isinstance(instance, (list, tuple)):
        return ImageSet(points=tuple(instance), origin=kind.value)
    results = enumerate_solutions(instance, kind, caps)
    logger.debug("Enumerated %d %s solutions.", len(results), kind.value)
    return ImageSet(points=tuple(r.point for r in results), origin=kind.value)


def brute_oracle(
    instance: Instance, kind: ProblemKind, caps: Optional[Caps] = None
) -> ExplicitOracle:
    return ExplicitOracle.from_results(enumerate_solutions(instance, kind, caps))


def brute_extremes(
    instance: Instance, kind: ProblemKind, caps: Optional[Caps] = None
) -> BiFront:
    """Nondominated extreme points of the exhaustively enumerated image."""
    image = enumerate_image(instance, kind, caps)
    if not image.points:
        raise InfeasibleError(f"The instance has no feasible {kind.value}.")
    return hull_extremes_2d(image.points)


def brute_front(
    instance: Instance, kind: ProblemKind, caps: Optional[Caps] = None
) -> BiFront:
    """Full Pareto-front of the exhaustively enumerated image."""
    image = enumerate_image(instance, kind, caps)
    return BiFront(pareto_filter(image.points))


def is_finished(
    instance: Instance,
    kind: ProblemKind,
    candidates: Iterable[Point],
    caps: Optional[Caps] = None,
) -> bool:
    """Decide whether the candidate set is the complete Pareto-front."""
    return set(candidates) == set(brute_front(instance, kind, caps))


def kp_feasible(kp: KPInstance) -> bool:
    """True iff some x ∈ {0,1}ⁿ has c1ᵀx ≤ k1 and c2ᵀx ≥ k2."""
    for bits in product((0, 1), repeat=kp.n):
        weight = sum(c for c, x in zip(kp.c1, bits) if x)
        profit = sum(c for c, x in zip(kp.c2, bits) if x)
        if weight <= kp.k1 and profit >= kp.k2:
            return True
    return False


def solve_linear_system(
    matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> Optional[Vector]:
    """Solve a square system exactly by Gauss-Jordan elimination.

    Returns None if the matrix is singular.
    """
    n = len(matrix)
    rows = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        p = rows[col][col]
        rows[col] = [a / p for a in rows[col]]
        for r in range(n):
            f = rows[r][col]
            if r != col and f:
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return tuple(row[n] for row in rows)


def basic_feasible_solutions(lp: LPInstance) -> List[Vector]:
    """Every vertex of {x | Ax ≥ b}, found by trying all n-subsets of rows."""
    vertices = set()
    for chosen in combinations(range(lp.m), lp.n):
        x = solve_linear_system([lp.A[i] for i in chosen], [lp.b[i] for i in chosen])
        if x is None:
            continue
        if all(sum(a * v for a, v in zip(row, x)) >= b for row, b in zip(lp.A, lp.b)):
            vertices.add(x)
    return sorted(vertices)


def brute_lp_vertices(lp: LPInstance, caps: Optional[Caps] = None) -> BiFront:
    """Nondominated vertices of the upper image {Cx | Ax ≥ b} + R²≥.

    With an ideal point every recession direction maps into R²≥, so the upper image
    is the convex hull of the vertex images plus R²≥.

    Raises:
        CapacityError: If n + m exceeds the LP cap.
        InfeasibleError: If the LP is infeasible.
        UnboundedError: If an objective is unbounded below.
        LPError: If the feasible set has no vertex.
    """
    from .lp import image, simplex_solve

    caps = caps or Caps()
    if lp.d != 2:
        raise UsageError(f"Expected a biobjective LP, got d = {lp.d}.")
    _check_cap("LP (n + m)", lp.n + lp.m, caps.lp_size)
    for k in range(2):
        outcome = simplex_solve(lp, lp.C[k])
        if outcome.status == LPStatus.infeasible:
            raise InfeasibleError("The LP is infeasible.")
        if outcome.status == LPStatus.unbounded:
            raise UnboundedError(f"Objective {k + 1} is unbounded below.")
    vertices = basic_feasible_solutions(lp)
    if not vertices:
        raise LPError("The feasible set has no vertex.")
    return hull_extremes_2d(image(lp, x) for x in vertices)
