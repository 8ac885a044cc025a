"""Exact rational linear programming.

A two-phase tableau simplex under Bland's rule, lexicographic LPs by value pinning,
the dual program D₂(y) whose lexicographically maximal weight names a supporting
facet, and the facet walk that lists the nondominated extreme points of a
biobjective LP's upper image with at most three points held at any time.
"""

import logging
import random
from fractions import Fraction
from math import comb
from typing import Iterator, List, Optional, Sequence, Tuple

from .core import Point, Weight
from .exceptions import (
    InfeasibleError,
    InvalidPointError,
    LPError,
    UnboundedError,
    UsageError,
)
from .models import (
    Command,
    DualPair,
    LPInstance,
    LPOutcome,
    LPStatus,
    ProblemKind,
    Vector,
    algorithm,
)
from .oracles import EnumerationLog

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


class _Tableau:
    """Dense tableau for min cost·z subject to rows·z = rhs, z ≥ 0.

    ``rows`` and ``rhs`` always hold B⁻¹A and B⁻¹b for the current basis and
    ``costs`` holds the reduced costs.
    """

    def __init__(
        self, rows: List[List[Fraction]], rhs: List[Fraction], basis: List[int]
    ):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.costs: List[Fraction] = []
        self.value = ZERO
        self.pivots = 0

    def set_objective(self, cost: Sequence[Fraction]) -> None:
        """Load a cost vector and price out the basic columns."""
        reduced = list(cost)
        value = ZERO
        for r, j in enumerate(self.basis):
            cj = cost[j]
            if cj:
                reduced = [a - cj * b for a, b in zip(reduced, self.rows[r])]
                value += cj * self.rhs[r]
        self.costs = reduced
        self.value = value

    def pivot(self, r: int, j: int) -> None:
        row = self.rows[r]
        p = row[j]
        if p != 1:
            row = [a / p for a in row]
            self.rows[r] = row
            self.rhs[r] = self.rhs[r] / p
        for i, other in enumerate(self.rows):
            f = other[j]
            if i != r and f:
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
                self.rhs[i] -= f * self.rhs[r]
        f = self.costs[j]
        if f:
            self.costs = [a - f * b for a, b in zip(self.costs, row)]
            self.value += f * self.rhs[r]
        self.basis[r] = j
        self.pivots += 1

    def run(self, allowed: int, cap: int) -> LPStatus:
        """Pivot under Bland's rule, entering only columns below ``allowed``."""
        while True:
            entering = next((j for j in range(allowed) if self.costs[j] < 0), None)
            if entering is None:
                return LPStatus.optimal
            best: Optional[Tuple[Tuple[Fraction, int], int]] = None
            for r, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    key = (self.rhs[r] / a, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return LPStatus.unbounded
            if self.pivots >= cap:
                raise LPError(
                    f"Simplex exceeded {cap} pivots; Bland's rule should not cycle."
                )
            self.pivot(best[1], entering)


def _standard_form(lp: LPInstance) -> Tuple[List[List[Fraction]], List[Fraction]]:
    """Rewrite Ax ≥ b, x free as [A, -A, -I](x⁺, x⁻, s) = b with b ≥ 0."""
    m, n = lp.m, lp.n
    rows, rhs = [], []
    for i, (a, b) in enumerate(zip(lp.A, lp.b)):
        row = list(a) + [-x for x in a] + [ZERO] * m
        row[2 * n + i] = -ONE
        if b < 0:
            row = [-x for x in row]
            b = -b
        rows.append(row)
        rhs.append(b)
    return rows, rhs


def simplex_solve(
    lp: LPInstance, objective: Optional[Sequence[Fraction]] = None
) -> LPOutcome:
    """Minimize one objective row over {x | Ax ≥ b} exactly.

    Args:
        lp: The instance. Its single row of C is used when objective is omitted.
        objective: An explicit objective row of length n.

    Returns:
        The optimal basic solution found by the two-phase simplex under Bland's rule,
        or an Infeasible / Unbounded outcome.

    Raises:
        UsageError: If no objective is given and C has several rows, or if the
            objective length differs from n.
    """
    if objective is None:
        if lp.d != 1:
            raise UsageError(f"simplex_solve needs one objective row, C has {lp.d}.")
        objective = lp.C[0]
    c = tuple(Fraction(v) for v in objective)
    if len(c) != lp.n:
        raise UsageError(f"Objective has {len(c)} entries, the LP has n = {lp.n}.")

    m, n = lp.m, lp.n
    width = 2 * n + m
    rows, rhs = _standard_form(lp)

    # Phase 1 with one artificial per row
    for i, row in enumerate(rows):
        row.extend(ONE if k == i else ZERO for k in range(m))
    tableau = _Tableau(rows, rhs, [width + i for i in range(m)])
    cap = 2 * comb(width + m, m) + 1
    tableau.set_objective([ZERO] * width + [ONE] * m)
    tableau.run(width + m, cap)
    if tableau.value > 0:
        logger.debug("Phase 1 ended at %s > 0: infeasible.", tableau.value)
        return LPOutcome(status=LPStatus.infeasible)

    # Drive zero-valued artificials out of the basis; drop rows that are redundant
    redundant = []
    for r, j in enumerate(tableau.basis):
        if j >= width:
            k = next((k for k in range(width) if tableau.rows[r][k] != 0), None)
            if k is None:
                redundant.append(r)
            else:
                tableau.pivot(r, k)
    for r in reversed(redundant):
        del tableau.rows[r], tableau.rhs[r], tableau.basis[r]
    tableau.rows = [row[:width] for row in tableau.rows]

    tableau.set_objective(list(c) + [-v for v in c] + [ZERO] * m)
    status = tableau.run(width, cap)
    logger.debug(
        "Simplex finished with status %s after %d pivots.", status, tableau.pivots
    )
    if status == LPStatus.unbounded:
        return LPOutcome(status=LPStatus.unbounded)

    z = [ZERO] * width
    for r, j in enumerate(tableau.basis):
        z[j] = tableau.rhs[r]
    x = tuple(z[i] - z[n + i] for i in range(n))
    return LPOutcome(status=LPStatus.optimal, solution=x, value=_dot(c, x))


def lex_lp_solve(lp: LPInstance, objectives: Sequence[Sequence[Fraction]]) -> LPOutcome:
    """Lexicographically minimize a sequence of objective rows.

    Each stage is solved by ``simplex_solve``; its optimal value is then pinned by an
    equality constraint before the next stage. The outcome's value is the first
    stage's optimum.

    Returns:
        The lexicographic optimum, or the Infeasible / Unbounded outcome of the stage
        where it occurred.

    Raises:
        UsageError: If no objective is given.
        LPError: If a pinned stage turns infeasible, which exact arithmetic rules out.
    """
    if not objectives:
        raise UsageError("lex_lp_solve needs at least one objective.")
    current = lp
    first_value: Optional[Fraction] = None
    outcome = LPOutcome(status=LPStatus.infeasible)
    for stage, c in enumerate(objectives):
        outcome = simplex_solve(current, c)
        if outcome.status != LPStatus.optimal:
            if stage > 0 and outcome.status == LPStatus.infeasible:
                raise LPError(f"Stage {stage + 1} became infeasible after pinning.")
            return outcome
        if first_value is None:
            first_value = outcome.value
        if stage < len(objectives) - 1:
            current = current.with_equality(tuple(c), outcome.value)
    return LPOutcome(
        status=LPStatus.optimal, solution=outcome.solution, value=first_value
    )


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), ZERO)


def image(lp: LPInstance, x: Sequence[Fraction]) -> Point:
    """Map a solution through C."""
    return tuple(_dot(row, x) for row in lp.C)


def weighted_row(lp: LPInstance, weight: Sequence[Fraction]) -> Vector:
    """The objective row ℓᵀC."""
    return tuple(
        sum((w * lp.C[k][j] for k, w in enumerate(weight)), ZERO) for j in range(lp.n)
    )


def lex_weighted_sum_lp(lp: LPInstance, weight: Weight) -> LPOutcome:
    """Solve the lexicographic weighted sum (ℓᵀCx, c1x, c2x) over the LP."""
    return lex_lp_solve(lp, [weighted_row(lp, weight), lp.C[0], lp.C[1]])


def build_d2(lp: LPInstance, y: Point) -> LPInstance:
    """Build D₂(y) over (u, λ) ∈ Q^{m+2} as a minimization LP.

    maximize bᵀu - yᵀλ s.t. (u, λ) ≥ 0, Aᵀu = Cᵀλ, 1ᵀλ = 1 becomes
    minimize -bᵀu + yᵀλ with the n + 1 equalities stored as inequality pairs
    followed by the m + 2 sign constraints.
    """
    if lp.d != 2:
        raise UsageError(f"D2 is built for biobjective LPs, got d = {lp.d}.")
    if len(y) != 2:
        raise UsageError(f"D2 needs a 2-D point, got {y}.")
    m, n, p = lp.m, lp.n, 2
    width = m + p
    rows: List[Vector] = []
    rhs: List[Fraction] = []

    def add_equality(row: Vector, value: Fraction) -> None:
        rows.extend([row, tuple(-a for a in row)])
        rhs.extend([value, -value])

    for j in range(n):
        add_equality(
            tuple(lp.A[i][j] for i in range(m)) + tuple(-lp.C[k][j] for k in range(p)),
            ZERO,
        )
    add_equality(tuple([ZERO] * m + [ONE] * p), ONE)
    for k in range(width):
        rows.append(tuple(ONE if i == k else ZERO for i in range(width)))
        rhs.append(ZERO)
    objective = tuple(-b for b in lp.b) + tuple(Fraction(v) for v in y)
    return LPInstance(A=rows, b=rhs, C=[objective])


def d2_value(lp: LPInstance, y: Point) -> Fraction:
    """Optimal value of D₂(y): zero exactly when y is on the lower boundary."""
    outcome = simplex_solve(build_d2(lp, y))
    if outcome.status != LPStatus.optimal:
        raise LPError(f"D2({y}) is {outcome.status.value}.")
    return -outcome.value  # type: ignore[operator]


def lexmax_lambda(d2: LPInstance) -> DualPair:
    """Return a maximizer of D₂ whose λ is lexicographically largest.

    The optimal value is pinned, then λ1 and λ2 are maximized in turn.

    Raises:
        LPError: If D₂ is infeasible or unbounded.
    """
    width = d2.n

    def maximize(k: int) -> Vector:
        return tuple(-ONE if i == k else ZERO for i in range(width))

    outcome = lex_lp_solve(d2, [d2.C[0], maximize(width - 2), maximize(width - 1)])
    if outcome.status != LPStatus.optimal:
        raise LPError(
            f"D2 is {outcome.status.value}; the primal LP has no ideal point."
        )
    solution = outcome.solution or ()
    return DualPair(u=solution[: width - 2], lam=solution[width - 2 :])


def facet_from_point(
    lp: LPInstance, y: Point
) -> Tuple[Tuple[Fraction, Fraction], Fraction]:
    """Return (λ, bᵀu), the facet λᵀz = bᵀu supporting the upper image in y.

    y is the lexicographic maximum of that facet.

    Raises:
        InvalidPointError: If y is not on the boundary of the upper image.
    """
    pair = lexmax_lambda(build_d2(lp, y))
    rhs = _dot(lp.b, pair.u)
    value = rhs - _dot(y, pair.lam)
    if value != 0:
        raise InvalidPointError(
            f"{y} is not on the upper image boundary (D2 = {value})."
        )
    return pair.lam, rhs


def _lws_point(lp: LPInstance, weight: Weight, log: EnumerationLog) -> Point:
    log.counter.tick("lex")
    outcome = lex_weighted_sum_lp(lp, weight)
    if outcome.status == LPStatus.infeasible:
        raise InfeasibleError("The LP is infeasible.")
    if outcome.status == LPStatus.unbounded:
        raise UnboundedError(f"An objective is unbounded below for weight {weight}.")
    return image(lp, outcome.solution or ())


@algorithm(
    "bilp-walk",
    commands=[Command.lp_extremes],
    kinds=[ProblemKind.lp],
    oracle=False,
)
def bilp_extreme_points(
    lp: LPInstance, log: Optional[EnumerationLog] = None
) -> Iterator[Point]:
    """Yield the nondominated extreme points of a biobjective LP's upper image.

    The walk starts at the minimizer of objective 2, finds the facet on which the
    current point is the lexicographic maximum, and moves to that facet's other
    endpoint until it reaches the minimizer of objective 1. Points are yielded in
    strictly decreasing objective 1.

    Args:
        lp: A feasible biobjective LP whose objectives are bounded below.
        log: Receives one event per emitted point and the retained-point high-water
            mark.

    Raises:
        InfeasibleError: If the LP is infeasible.
        UnboundedError: If an objective is unbounded below.
    """
    if lp.d != 2:
        raise UsageError(f"The facet walk needs exactly two objectives, got {lp.d}.")
    log = log if log is not None else EnumerationLog()

    current = _lws_point(lp, (ZERO, ONE), log)
    last = _lws_point(lp, (ONE, ZERO), log)
    log.retain(2 if current != last else 1)
    log.iterations += 1
    log.record(current)
    yield current

    while current != last:
        log.counter.tick("d2")
        lam, rhs = facet_from_point(lp, current)
        pinned = lp.with_equality(weighted_row(lp, lam), rhs)
        following = _lws_point(pinned, lam, log)
        log.retain(3)
        logger.debug(
            "Facet %s·y = %s leads from %s to %s.", lam, rhs, current, following
        )
        if not (following[0] < current[0] and following[1] > current[1]):
            raise LPError(f"Facet walk stalled at {current}.")
        current = following
        log.iterations += 1
        log.record(current)
        yield current


def random_lp(
    rng: random.Random, n: int, extra_rows: int, bound: int = 6
) -> LPInstance:
    """Random feasible biobjective LP with an ideal point.

    x ≥ 0 plus rows with nonnegative coefficients and right hand sides, minimized
    under nonnegative objectives, so every weighted sum is bounded below by zero.
    """
    A: List[List[int]] = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    b: List[int] = [0] * n
    for _ in range(extra_rows):
        row = [rng.randint(0, bound) for _ in range(n)]
        if not any(row):
            row[rng.randrange(n)] = 1
        A.append(row)
        b.append(rng.randint(1, 2 * bound))
    C = [[rng.randint(0, bound) for _ in range(n)] for _ in range(2)]
    return LPInstance(A=A, b=b, C=C)
