"""Max-min compromise between the two crisp objectives, and the ideal point.

The payoff table records, for each objective, its solo optimum (best level)
and its value at the other objective's optimum (worst acceptable level).
Those levels define linear satisfaction memberships; the compromise model
maximizes the smallest membership.  A second lexicographic pass then cleans
up weakly-efficient answers: holding the achieved level fixed, it minimizes
the range-normalized sum of both objectives, so the returned plan is Pareto
optimal rather than merely max-min optimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .crisp import (BiObjectiveMilp, build_bi_objective, build_single_objective,
                    constraint_rows, extract_plan, to_milp)
from .intervals import CenterWidth
from .milp import OPTIMAL, MilpModel, Row, solve_milp
from .model import IfctpInstance, ShipmentPlan

# Ranges below this are treated as degenerate (both anchors agree on the objective).
RANGE_TOL = 1e-9
# Numerical slack when pinning the achieved level in the refinement pass.
LEVEL_SLACK = 1e-9


class InfeasibleProblemError(Exception):
    """A required single-objective or compromise solve had no feasible point."""


@dataclass(frozen=True)
class PayoffTable:
    """Best (aspired) and worst (highest acceptable) level per objective.

    Index 0 is the lower-endpoint objective, index 1 the width objective.
    anchor_plans holds the two single-objective optima when the table was
    computed rather than supplied.
    """

    best: tuple[float, float]
    worst: tuple[float, float]
    anchor_plans: Optional[tuple[ShipmentPlan, ShipmentPlan]] = None

    def __post_init__(self) -> None:
        for k in range(2):
            if self.best[k] > self.worst[k]:
                raise ValueError(
                    f"objective {k}: best level {self.best[k]} exceeds worst {self.worst[k]}")

    def spans(self) -> tuple[float, float]:
        return (self.worst[0] - self.best[0], self.worst[1] - self.best[1])


@dataclass(frozen=True)
class CompromiseResult:
    lambda_star: float
    plan: ShipmentPlan
    objective_values: tuple[float, float]
    memberships: tuple[float, float]


def membership(value: float, best: float, worst: float) -> float:
    """Linear satisfaction degree in [0, 1]; 1 when the levels coincide."""
    if worst - best <= RANGE_TOL:
        return 1.0
    return min(1.0, max(0.0, (worst - value) / (worst - best)))


def build_payoff(bi: BiObjectiveMilp) -> PayoffTable:
    """Solve each objective alone and cross-evaluate the two anchor plans."""
    anchors = []
    for objective in (bi.obj_lower, bi.obj_width):
        sol = solve_milp(to_milp(bi, objective))
        if sol.status != OPTIMAL:
            raise InfeasibleProblemError(f"single-objective solve ended {sol.status}")
        anchors.append(extract_plan(bi, sol.assignment))
    lower_at = [bi.obj_lower.value(p) for p in anchors]
    width_at = [bi.obj_width.value(p) for p in anchors]
    best = (lower_at[0], width_at[1])
    worst = (max(lower_at), max(width_at))
    return PayoffTable(best, worst, (anchors[0], anchors[1]))


def build_max_min_model(bi: BiObjectiveMilp, payoff: PayoffTable) -> MilpModel:
    """Max-min model: maximize the auxiliary level variable.

    For each objective with a positive payoff range the constraint
    z_k + level * range_k <= worst_k keeps the level below that objective's
    membership.  A degenerate range pins the objective to its optimum
    instead and leaves the level unconstrained by it.
    """
    mn = bi.m * bi.n
    rows, bounds, binaries = constraint_rows(bi, extra_vars=1)
    level_var = 2 * mn
    for k, objective in ((0, bi.obj_lower), (1, bi.obj_width)):
        coeffs = objective.flat(extra_vars=1)
        span = payoff.worst[k] - payoff.best[k]
        if span > RANGE_TOL:
            coeffs[level_var] = span
        rows.append(Row(coeffs, "<=", payoff.worst[k] - objective.constant))
    bounds.append((0.0, 1.0))
    objective_vector = [0.0] * (2 * mn) + [-1.0]  # maximize the level
    return MilpModel(objective_vector, rows, binaries, bounds)


def _refine(bi: BiObjectiveMilp, payoff: PayoffTable, max_min: MilpModel,
            lambda_star: float) -> MilpModel:
    """Second-stage model: keep the level at lambda_star, minimize both objectives.

    Weights are reciprocals of the payoff ranges so neither objective's scale
    dominates; degenerate ranges get weight one (the level row already pins them).
    """
    mn = bi.m * bi.n
    level_var = 2 * mn
    spans = payoff.spans()
    combined = [0.0] * (2 * mn + 1)
    for k, objective in ((0, bi.obj_lower), (1, bi.obj_width)):
        weight = 1.0 / spans[k] if spans[k] > RANGE_TOL else 1.0
        for idx, coeff in enumerate(objective.flat(extra_vars=1)):
            combined[idx] += weight * coeff
    bounds = list(max_min.bounds)
    bounds[level_var] = (max(0.0, lambda_star - LEVEL_SLACK), 1.0)
    return MilpModel(combined, max_min.rows, max_min.binaries, bounds)


def solve_compromise(instance: IfctpInstance,
                     payoff: Optional[PayoffTable] = None) -> CompromiseResult:
    """Full compromise pipeline for one instance.

    A caller-supplied payoff table (e.g. levels taken from an external source)
    replaces the computed one; infeasibility anywhere raises.
    """
    bi = build_bi_objective(instance)
    if payoff is None:
        payoff = build_payoff(bi)

    max_min = build_max_min_model(bi, payoff)
    sol = solve_milp(max_min)
    if sol.status != OPTIMAL:
        raise InfeasibleProblemError(f"compromise solve ended {sol.status}")
    lambda_star = min(1.0, max(0.0, -sol.objective_value))

    refined = solve_milp(_refine(bi, payoff, max_min, lambda_star))
    if refined.status != OPTIMAL:  # lambda_star is attainable, so this cannot fail
        raise InfeasibleProblemError(f"refinement solve ended {refined.status}")
    plan = extract_plan(bi, refined.assignment)
    values = (bi.obj_lower.value(plan), bi.obj_width.value(plan))
    memberships = (membership(values[0], payoff.best[0], payoff.worst[0]),
                   membership(values[1], payoff.best[1], payoff.worst[1]))
    return CompromiseResult(lambda_star, plan, values, memberships)


def compute_ideal(instance: IfctpInstance) -> CenterWidth:
    """Componentwise minima of expected cost and uncertainty (generally unattainable)."""
    coordinates = []
    for which in ("center", "width"):
        sol = solve_milp(build_single_objective(instance, which))
        if sol.status != OPTIMAL:
            raise InfeasibleProblemError(f"ideal-point solve ({which}) ended {sol.status}")
        coordinates.append(sol.objective_value)
    return CenterWidth(coordinates[0], max(0.0, coordinates[1]))
