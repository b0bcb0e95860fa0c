"""Data model for fixed-charge transportation instances, crisp and interval-valued.

An instance ships a homogeneous product from ``m`` sources to ``n``
destinations.  Every route (i, j) carries a per-unit cost and a fixed charge
paid once if the route is used at all.  In the interval variant every cost,
charge, supply and demand is an :class:`~ifctp.intervals.Interval`.

Validation returns a list of human-readable violations instead of raising, so
callers can report all problems in a table at once.  The violation order is
stable: scalar checks, then matrix entries row-major, then vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .intervals import Interval

# Default absolute tolerance for plan feasibility checks; matches the LP
# engine's primal feasibility tolerance order of magnitude.
FEASIBILITY_TOL = 1e-6
# A shipment below this is treated as zero when linking x to y.
INTEGRALITY_TOL = 1e-6


def _as_matrix(rows: Sequence[Sequence], what: str) -> tuple[tuple, ...]:
    out = tuple(tuple(row) for row in rows)
    if not out or any(len(row) != len(out[0]) for row in out):
        raise ValueError(f"{what} must be a non-empty rectangular matrix")
    return out


@dataclass(frozen=True)
class IfctpInstance:
    """Interval-valued fixed-charge transportation instance.

    unit_cost and fixed_charge are m x n matrices of Interval; supply has
    length m and demand length n.  Construction only normalizes shapes;
    semantic checks live in :func:`validate`.
    """

    unit_cost: tuple[tuple[Interval, ...], ...]
    fixed_charge: tuple[tuple[Interval, ...], ...]
    supply: tuple[Interval, ...]
    demand: tuple[Interval, ...]

    def __init__(self, unit_cost, fixed_charge, supply, demand):
        object.__setattr__(self, "unit_cost", _as_matrix(unit_cost, "unit_cost"))
        object.__setattr__(self, "fixed_charge", _as_matrix(fixed_charge, "fixed_charge"))
        object.__setattr__(self, "supply", tuple(supply))
        object.__setattr__(self, "demand", tuple(demand))

    @property
    def m(self) -> int:
        return len(self.supply)

    @property
    def n(self) -> int:
        return len(self.demand)

    def is_crisp(self) -> bool:
        """True when every interval has zero width (a plain crisp FCTP)."""
        cells = [c for row in self.unit_cost for c in row]
        cells += [c for row in self.fixed_charge for c in row]
        cells += list(self.supply) + list(self.demand)
        return all(c.is_crisp() for c in cells)


@dataclass(frozen=True)
class FctpInstance:
    """Crisp fixed-charge transportation instance (all parameters are reals)."""

    unit_cost: tuple[tuple[float, ...], ...]
    fixed_charge: tuple[tuple[float, ...], ...]
    supply: tuple[float, ...]
    demand: tuple[float, ...]

    def __init__(self, unit_cost, fixed_charge, supply, demand):
        object.__setattr__(self, "unit_cost", _as_matrix(unit_cost, "unit_cost"))
        object.__setattr__(self, "fixed_charge", _as_matrix(fixed_charge, "fixed_charge"))
        object.__setattr__(self, "supply", tuple(supply))
        object.__setattr__(self, "demand", tuple(demand))

    @property
    def m(self) -> int:
        return len(self.supply)

    @property
    def n(self) -> int:
        return len(self.demand)

    def as_interval_instance(self) -> IfctpInstance:
        """Degenerate-interval copy; lets the interval pipeline solve crisp FCTPs."""
        crisp = lambda v: Interval(float(v), float(v))
        return IfctpInstance(
            [[crisp(v) for v in row] for row in self.unit_cost],
            [[crisp(v) for v in row] for row in self.fixed_charge],
            [crisp(v) for v in self.supply],
            [crisp(v) for v in self.demand],
        )


@dataclass(frozen=True)
class ShipmentPlan:
    """A concrete assignment: shipped quantities y and route activations x."""

    y: tuple[tuple[float, ...], ...]
    x: tuple[tuple[int, ...], ...]

    def __init__(self, y, x):
        object.__setattr__(self, "y", _as_matrix(y, "y"))
        object.__setattr__(self, "x", _as_matrix(x, "x"))

    @classmethod
    def from_quantities(cls, y: Sequence[Sequence[float]],
                        tol: float = INTEGRALITY_TOL) -> ShipmentPlan:
        """Derive activations from quantities: a route is open iff it ships > tol."""
        ys = [list(map(float, row)) for row in y]
        xs = [[1 if v > tol else 0 for v in row] for row in ys]
        return cls(ys, xs)

    @property
    def m(self) -> int:
        return len(self.y)

    @property
    def n(self) -> int:
        return len(self.y[0])


def _interval_violations(kind: str, i: int, j: int | None, iv: Interval,
                         require_nonneg_lo: bool) -> list[str]:
    where = f"{kind}({i + 1},{j + 1})" if j is not None else f"{kind}({i + 1})"
    out = []
    # Defensive re-check: Interval construction already rejects lo > hi, but a
    # matrix assembled by other means must not slip through validation.
    if iv.lo > iv.hi:
        out.append(f"{where}: interval lo {iv.lo:g} > hi {iv.hi:g}")
    if require_nonneg_lo and iv.lo < 0:
        out.append(f"{where}: negative lower endpoint {iv.lo:g}")
    return out


def validate(instance: IfctpInstance, *, check_aggregate: bool = True) -> list[str]:
    """Structural and feasibility checks; empty list means the instance is sound.

    Aggregate feasibility compares upper supplies against lower demands,
    because the crisp equivalent caps each row at its supply upper limit and
    floors each column at its demand lower limit.  Pass check_aggregate=False
    to check structure only (a well-formed but undersupplied instance is an
    infeasible problem, not a malformed one).
    """
    v: list[str] = []
    m, n = instance.m, instance.n
    if m < 1:
        v.append("need at least one source")
    if n < 1:
        v.append("need at least one destination")
    if m < 1 or n < 1:
        return v

    for name, matrix in (("unit_cost", instance.unit_cost),
                         ("fixed_charge", instance.fixed_charge)):
        if len(matrix) != m:
            v.append(f"{name} has {len(matrix)} rows, expected m={m}")
            continue
        if any(len(row) != n for row in matrix):
            v.append(f"{name} rows must all have n={n} entries")
            continue
        for i, row in enumerate(matrix):
            for j, iv in enumerate(row):
                v.extend(_interval_violations(name, i, j, iv,
                                              require_nonneg_lo=(name == "fixed_charge")))

    for i, iv in enumerate(instance.supply):
        v.extend(_interval_violations("supply", i, None, iv, require_nonneg_lo=True))
    for j, iv in enumerate(instance.demand):
        v.extend(_interval_violations("demand", j, None, iv, require_nonneg_lo=True))

    if check_aggregate and not v:
        total_supply = sum(iv.hi for iv in instance.supply)
        total_demand = sum(iv.lo for iv in instance.demand)
        if total_supply < total_demand:
            v.append(f"aggregate supply {total_supply:g} < aggregate demand {total_demand:g}")
    return v


def check_plan(instance: IfctpInstance, plan: ShipmentPlan,
               tol: float = FEASIBILITY_TOL) -> list[str]:
    """Check a plan against the crisp constraint set and the x/y linking rule.

    Returns one violation string per broken rule: cell-level checks row-major
    (sign, binarity, linking), then row supply caps, then column demand floors.
    Dimension mismatches are malformed input and raise instead.
    """
    m, n = instance.m, instance.n
    if plan.m != m or plan.n != n or len(plan.x) != m or any(len(r) != n for r in plan.x):
        raise ValueError(f"plan shape {plan.m}x{plan.n} does not match instance {m}x{n}")

    v: list[str] = []
    for i in range(m):
        for j in range(n):
            yij, xij = plan.y[i][j], plan.x[i][j]
            if yij < -tol:
                v.append(f"y({i + 1},{j + 1}) = {yij:g} is negative")
            if xij not in (0, 1):
                v.append(f"x({i + 1},{j + 1}) = {xij!r} is not binary")
                continue
            if yij > INTEGRALITY_TOL and xij == 0:
                v.append(f"route ({i + 1},{j + 1}) ships {yij:g} but is not activated")
            if yij <= INTEGRALITY_TOL and xij == 1:
                v.append(f"route ({i + 1},{j + 1}) is activated but ships nothing")

    for i in range(m):
        shipped = sum(plan.y[i])
        cap = instance.supply[i].hi
        if shipped > cap + tol:
            v.append(f"row {i + 1} ships {shipped:g} > supply cap {cap:g}")
    for j in range(n):
        received = sum(plan.y[i][j] for i in range(m))
        floor = instance.demand[j].lo
        if received < floor - tol:
            v.append(f"column {j + 1} receives {received:g} < demand floor {floor:g}")
    return v
