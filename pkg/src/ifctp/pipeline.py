"""End-to-end runs: validate, crispify, compromise, ideal point, distance report.

The report keeps raw solution objects; derived quantities (center/width form,
distances) are recomputed on access so a rendered report can never disagree
with its own inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .compromise import (InfeasibleProblemError, PayoffTable, build_payoff,
                         build_max_min_model, solve_compromise, compute_ideal)
from .crisp import (InvalidInstanceError, build_bi_objective, center_objective,
                    constraint_rows, evaluate_interval_objective, to_milp)
from .intervals import CenterWidth, Interval, distance_to_ideal
from .milp import (OPTIMAL, ORACLE_MAX_BINARIES, MilpModel, OracleScopeError,
                   Row, oracle_solve, solve_milp)
from .model import FEASIBILITY_TOL, IfctpInstance, ShipmentPlan, check_plan, validate

DOMINANCE_TOL = 1e-6


@dataclass(frozen=True)
class CompetitorEntry:
    """An externally obtained solution to compare against, by objective interval."""

    name: str
    objective: Interval

    def center_width(self) -> CenterWidth:
        return self.objective.as_center_width()


@dataclass(frozen=True)
class CompromiseReport:
    status: str  # "optimal" or "infeasible"
    sources: int
    destinations: int
    supply_cap_total: float
    demand_floor_total: float
    payoff: Optional[PayoffTable] = None
    lambda_star: Optional[float] = None
    plan: Optional[ShipmentPlan] = None
    objective: Optional[Interval] = None
    memberships: Optional[tuple[float, float]] = None
    ideal: Optional[CenterWidth] = None
    competitor: Optional[CompetitorEntry] = None
    plan_violations: tuple[str, ...] = ()

    @property
    def center_width(self) -> Optional[CenterWidth]:
        return None if self.objective is None else self.objective.as_center_width()

    @property
    def distance(self) -> Optional[float]:
        if self.objective is None or self.ideal is None:
            return None
        return distance_to_ideal(self.center_width, self.ideal)

    @property
    def competitor_distance(self) -> Optional[float]:
        if self.competitor is None or self.ideal is None:
            return None
        return distance_to_ideal(self.competitor.center_width(), self.ideal)


def run_pipeline(instance: IfctpInstance, *,
                 payoff_override: Optional[tuple[float, float, float, float]] = None,
                 competitor: Optional[CompetitorEntry] = None,
                 tolerance: float = FEASIBILITY_TOL) -> CompromiseReport:
    """Validate, solve and assemble the full report for one instance.

    payoff_override is (L1, U1, L2, U2): aspired and worst levels for the
    lower-endpoint and width objectives, replacing the computed payoff table.
    Structural defects raise InvalidInstanceError; an undersupplied instance
    comes back with status "infeasible" and no plan.
    """
    structural = validate(instance, check_aggregate=False)
    if structural:
        raise InvalidInstanceError(structural[0])

    summary = dict(
        sources=instance.m,
        destinations=instance.n,
        supply_cap_total=sum(iv.hi for iv in instance.supply),
        demand_floor_total=sum(iv.lo for iv in instance.demand),
    )
    try:
        ideal = compute_ideal(instance)
        if payoff_override is not None:
            l1, u1, l2, u2 = payoff_override
            payoff = PayoffTable((l1, l2), (u1, u2))
        else:
            payoff = build_payoff(build_bi_objective(instance))
        result = solve_compromise(instance, payoff=payoff)
    except InfeasibleProblemError:
        return CompromiseReport(status="infeasible", competitor=competitor, **summary)

    objective = evaluate_interval_objective(instance, result.plan)
    violations = tuple(check_plan(instance, result.plan, tol=tolerance))
    return CompromiseReport(
        status="optimal",
        payoff=payoff,
        lambda_star=result.lambda_star,
        plan=result.plan,
        objective=objective,
        memberships=result.memberships,
        ideal=ideal,
        competitor=competitor,
        plan_violations=violations,
        **summary,
    )


# --------------------------------------------------------------------------
# oracle cross-check
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckLine:
    name: str
    solver_value: float
    oracle_value: float
    passed: bool

    @property
    def delta(self) -> float:
        return abs(self.solver_value - self.oracle_value)


@dataclass(frozen=True)
class OracleCheck:
    lines: tuple[CheckLine, ...]
    dominated: bool  # True means enumeration found a plan beating the compromise

    @property
    def passed(self) -> bool:
        return not self.dominated and all(line.passed for line in self.lines)


def _values_agree(a: float, b: float, rel_tol: float) -> bool:
    return abs(a - b) <= rel_tol * max(1.0, abs(a), abs(b))


def _bounded_objective_model(bi, minimize, cap_objective, cap_value) -> MilpModel:
    """Minimize one objective subject to the other staying at or below a cap."""
    rows, bounds, binaries = constraint_rows(bi)
    rows.append(Row(cap_objective.flat(), "<=", cap_value - cap_objective.constant))
    return MilpModel(minimize.flat(), rows, binaries, bounds, offset=minimize.constant)


def run_oracle_check(instance: IfctpInstance, rel_tol: float = 1e-6) -> OracleCheck:
    """Compare branch-and-bound answers against exhaustive enumeration.

    Covers the two ideal-point solves and the max-min model, then searches
    every activation pattern for a plan that Pareto-dominates the compromise
    solution.  Refuses instances with more routes than the oracle can
    enumerate.
    """
    if instance.m * instance.n > ORACLE_MAX_BINARIES:
        raise OracleScopeError(
            f"{instance.m * instance.n} routes exceed the oracle's scope of "
            f"{ORACLE_MAX_BINARIES}")

    bi = build_bi_objective(instance)
    lines = []
    named_models = (
        ("ideal-center", to_milp(bi, center_objective(instance))),
        ("ideal-width", to_milp(bi, bi.obj_width)),
    )
    for name, model in named_models:
        solver = solve_milp(model)
        oracle = oracle_solve(model)
        ok = solver.status == oracle.status and (
            solver.status != OPTIMAL
            or _values_agree(solver.objective_value, oracle.objective_value, rel_tol))
        if solver.status == OPTIMAL:
            lines.append(CheckLine(name, solver.objective_value, oracle.objective_value, ok))
        else:
            lines.append(CheckLine(name, float("nan"), float("nan"), ok))

    payoff = build_payoff(bi)
    max_min = build_max_min_model(bi, payoff)
    solver_mm = solve_milp(max_min)
    oracle_mm = oracle_solve(max_min)
    ok = solver_mm.status == oracle_mm.status and (
        solver_mm.status != OPTIMAL
        or _values_agree(-solver_mm.objective_value, -oracle_mm.objective_value, rel_tol))
    lines.append(CheckLine("max-min level", -solver_mm.objective_value,
                           -oracle_mm.objective_value, ok))

    result = solve_compromise(instance, payoff=payoff)
    z_lower, z_width = result.objective_values
    dominated = False
    probes = (
        (bi.obj_width, bi.obj_lower, z_lower, z_width),   # shave width at equal lower bound
        (bi.obj_lower, bi.obj_width, z_width, z_lower),   # shave lower at equal width
    )
    for minimize, cap_obj, cap_val, incumbent in probes:
        probe = oracle_solve(_bounded_objective_model(bi, minimize, cap_obj,
                                                      cap_val + 1e-9))
        if probe.status == OPTIMAL and probe.objective_value < incumbent - DOMINANCE_TOL:
            dominated = True
    return OracleCheck(tuple(lines), dominated)
