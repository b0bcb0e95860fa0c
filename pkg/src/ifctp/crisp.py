"""Crisp equivalents of an interval instance.

The interval objective sum([t_ij] y_ij + [l_ij] x_ij) splits into two crisp
objectives: its lower endpoint (center minus width coefficients) and its
width.  Constraints relax supplies to their upper limits and demands to their
lower limits.  The conditional activation rule "x_ij = 1 iff y_ij > 0" is
linearized exactly as y_ij <= M_ij x_ij with M_ij equal to the row's supply
cap, which the row constraint already implies for any feasible y.

All models built here share one variable layout: y(i,j) at index i*n + j,
x(i,j) at m*n + i*n + j, optional extra columns appended after that.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intervals import Interval
from .milp import MilpModel, Row
from .model import INTEGRALITY_TOL, IfctpInstance, ShipmentPlan, validate


class InvalidInstanceError(ValueError):
    """Raised when a model is requested for an instance that fails validation."""


@dataclass(frozen=True)
class LinearObjective:
    """Linear function of a shipment plan: sum of y and x terms plus a constant."""

    y_coeffs: tuple[tuple[float, ...], ...]
    x_coeffs: tuple[tuple[float, ...], ...]
    constant: float = 0.0

    def value(self, plan: ShipmentPlan) -> float:
        total = self.constant
        for i, row in enumerate(self.y_coeffs):
            for j, coeff in enumerate(row):
                total += coeff * plan.y[i][j] + self.x_coeffs[i][j] * plan.x[i][j]
        return total

    def flat(self, extra_vars: int = 0) -> list[float]:
        """Coefficient vector over the shared (y, x, extras) layout."""
        out = [c for row in self.y_coeffs for c in row]
        out += [c for row in self.x_coeffs for c in row]
        out += [0.0] * extra_vars
        return out


@dataclass(frozen=True)
class BiObjectiveMilp:
    """The crisp bi-objective program: minimize the lower endpoint and the width."""

    obj_lower: LinearObjective
    obj_width: LinearObjective
    supply_caps: tuple[float, ...]
    demand_floors: tuple[float, ...]
    big_m: tuple[tuple[float, ...], ...]

    @property
    def m(self) -> int:
        return len(self.supply_caps)

    @property
    def n(self) -> int:
        return len(self.demand_floors)


def _centers_widths(matrix) -> tuple[list[list[float]], list[list[float]]]:
    centers = [[iv.center for iv in row] for row in matrix]
    widths = [[iv.width for iv in row] for row in matrix]
    return centers, widths


def _require_valid(instance: IfctpInstance) -> None:
    violations = validate(instance, check_aggregate=False)
    if violations:
        raise InvalidInstanceError(violations[0])


def build_bi_objective(instance: IfctpInstance) -> BiObjectiveMilp:
    """Derive both crisp objectives and the relaxed constraint data."""
    _require_valid(instance)
    tc, tw = _centers_widths(instance.unit_cost)
    lc, lw = _centers_widths(instance.fixed_charge)
    m, n = instance.m, instance.n
    # Lower endpoint = center - width, exact as floats since both derive from
    # the same division by two.
    lower = LinearObjective(
        tuple(tuple(tc[i][j] - tw[i][j] for j in range(n)) for i in range(m)),
        tuple(tuple(lc[i][j] - lw[i][j] for j in range(n)) for i in range(m)),
    )
    width = LinearObjective(
        tuple(tuple(row) for row in tw),
        tuple(tuple(row) for row in lw),
    )
    caps = tuple(iv.hi for iv in instance.supply)
    floors = tuple(iv.lo for iv in instance.demand)
    big_m = tuple(tuple(caps[i] for _ in range(n)) for i in range(m))
    return BiObjectiveMilp(lower, width, caps, floors, big_m)


def center_objective(instance: IfctpInstance) -> LinearObjective:
    """Expected-cost objective (interval centers)."""
    tc, _ = _centers_widths(instance.unit_cost)
    lc, _ = _centers_widths(instance.fixed_charge)
    return LinearObjective(tuple(map(tuple, tc)), tuple(map(tuple, lc)))


def constraint_rows(bi: BiObjectiveMilp, extra_vars: int = 0
                    ) -> tuple[list[Row], list[tuple[float, float | None]], list[int]]:
    """Shared constraint set: supply caps, demand floors, big-M linking.

    Returns (rows, bounds, binary indices) over the (y, x, extras) layout;
    extra columns get zero coefficients and must be bounded by the caller.
    """
    m, n = bi.m, bi.n
    mn = m * n
    nv = 2 * mn + extra_vars
    rows: list[Row] = []

    for i in range(m):
        coeffs = [0.0] * nv
        for j in range(n):
            coeffs[i * n + j] = 1.0
        rows.append(Row(coeffs, "<=", bi.supply_caps[i]))
    for j in range(n):
        coeffs = [0.0] * nv
        for i in range(m):
            coeffs[i * n + j] = 1.0
        rows.append(Row(coeffs, ">=", bi.demand_floors[j]))
    for i in range(m):
        for j in range(n):
            coeffs = [0.0] * nv
            coeffs[i * n + j] = 1.0
            coeffs[mn + i * n + j] = -bi.big_m[i][j]
            rows.append(Row(coeffs, "<=", 0.0))

    bounds: list[tuple[float, float | None]] = [(0.0, None)] * mn + [(0.0, 1.0)] * mn
    binaries = list(range(mn, 2 * mn))
    return rows, bounds, binaries


def to_milp(bi: BiObjectiveMilp, objective: LinearObjective) -> MilpModel:
    """Single-objective model over the shared constraint set."""
    rows, bounds, binaries = constraint_rows(bi)
    return MilpModel(objective.flat(), rows, binaries, bounds, offset=objective.constant)


def build_single_objective(instance: IfctpInstance, which: str) -> MilpModel:
    """Model minimizing either the expected cost ("center") or the uncertainty ("width")."""
    if which not in ("center", "width"):
        raise ValueError(f"which must be 'center' or 'width', got {which!r}")
    bi = build_bi_objective(instance)
    objective = center_objective(instance) if which == "center" else bi.obj_width
    return to_milp(bi, objective)


def extract_plan(bi: BiObjectiveMilp, assignment, tol: float = INTEGRALITY_TOL) -> ShipmentPlan:
    """Shipment plan from a solver assignment.

    Activations are re-derived from the quantities: with nonnegative fixed
    charges, opening a route that ships nothing never changes an optimal
    objective, so snapping such x to zero is free and keeps plans canonical.
    """
    m, n = bi.m, bi.n
    y = [[max(float(assignment[i * n + j]), 0.0) for j in range(n)] for i in range(m)]
    return ShipmentPlan.from_quantities(y, tol)


def evaluate_interval_objective(instance: IfctpInstance, plan: ShipmentPlan) -> Interval:
    """Total interval cost of a plan, accumulated with interval arithmetic."""
    if plan.m != instance.m or plan.n != instance.n:
        raise ValueError(f"plan shape {plan.m}x{plan.n} does not match "
                         f"instance {instance.m}x{instance.n}")
    total = Interval(0.0, 0.0)
    for i in range(instance.m):
        for j in range(instance.n):
            total = total + instance.unit_cost[i][j].scale(plan.y[i][j])
            total = total + instance.fixed_charge[i][j].scale(plan.x[i][j])
    return total
