"""Exact solver for small dense mixed-integer linear programs.

The programs produced by this package are tiny (tens of variables, a handful
of binaries), so the engine favours transparency over scale: a two-phase
primal simplex on dense numpy tableaus, wrapped in best-bound branch and
bound over the binary variables.  An exhaustive enumeration oracle provides
an independent second opinion for testing.

Determinism: pivot, branching and node-selection rules are all fixed with
index-order tie breaking, so two runs on identical input produce identical
assignments.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import numpy as np

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

LP_FEAS_TOL = 1e-7        # primal feasibility (phase-1 residual)
PIVOT_TOL = 1e-9          # smallest acceptable pivot element / reduced cost
INT_TOL = 1e-6            # binary integrality tolerance
DEGENERATE_LIMIT = 500    # consecutive degenerate pivots before Bland's rule
ITERATION_CAP = 100_000   # hard stop against pathological cycling
DEFAULT_NODE_LIMIT = 10 ** 6
ORACLE_MAX_BINARIES = 20
# An incumbent must beat the previous one by more than this (avoids tie-flapping).
IMPROVEMENT_EPS = 1e-9


class DegeneratePivotError(RuntimeError):
    """Numerical breakdown: no acceptable pivot even under Bland's rule."""


class NodeLimitError(RuntimeError):
    """Branch and bound exhausted its node budget."""


class OracleScopeError(ValueError):
    """Problem has too many binaries for exhaustive enumeration."""


@dataclass(frozen=True)
class Row:
    """One linear constraint: coeffs . v  <relation>  rhs."""

    coeffs: tuple[float, ...]
    relation: str  # "<=", ">=" or "="
    rhs: float

    def __post_init__(self) -> None:
        if self.relation not in ("<=", ">=", "="):
            raise ValueError(f"unknown relation {self.relation!r}")
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))
        if not all(math.isfinite(c) for c in self.coeffs) or not math.isfinite(self.rhs):
            raise ValueError("constraint coefficients must be finite")


@dataclass(frozen=True)
class MilpModel:
    """Minimization model over a flat variable vector.

    bounds holds one (lower, upper) pair per variable; upper may be None for
    +inf.  binaries lists variable indices restricted to {0, 1}; each must be
    bounded within [0, 1].
    """

    objective: tuple[float, ...]
    rows: tuple[Row, ...]
    binaries: frozenset[int]
    bounds: tuple[tuple[float, Optional[float]], ...]
    offset: float = 0.0

    def __init__(self, objective, rows, binaries, bounds, offset=0.0):
        object.__setattr__(self, "objective", tuple(float(c) for c in objective))
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "binaries", frozenset(binaries))
        object.__setattr__(self, "bounds",
                           tuple((float(lo), None if hi is None else float(hi))
                                 for lo, hi in bounds))
        object.__setattr__(self, "offset", float(offset))
        self._check()

    def _check(self) -> None:
        nv = len(self.objective)
        if len(self.bounds) != nv:
            raise ValueError(f"{len(self.bounds)} bounds for {nv} variables")
        if not self.rows:
            raise ValueError("constraint list must be non-empty")
        for row in self.rows:
            if len(row.coeffs) != nv:
                raise ValueError(f"row has {len(row.coeffs)} coefficients, expected {nv}")
        if not all(math.isfinite(c) for c in self.objective):
            raise ValueError("objective coefficients must be finite")
        for lo, hi in self.bounds:
            if hi is not None and lo > hi:
                raise ValueError(f"variable bound lo {lo} > hi {hi}")
        for j in self.binaries:
            if not 0 <= j < nv:
                raise ValueError(f"binary index {j} out of range")
            lo, hi = self.bounds[j]
            if lo < 0 or hi is None or hi > 1:
                raise ValueError(f"binary variable {j} must be bounded within [0, 1]")

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    def value_at(self, assignment: Sequence[float]) -> float:
        return float(np.dot(self.objective, assignment)) + self.offset


@dataclass(frozen=True)
class MilpSolution:
    """Solver outcome; assignment and objective_value are None unless optimal.

    nodes counts LP solves performed (branch-and-bound nodes, or enumerated
    patterns for the oracle).
    """

    status: str
    objective_value: Optional[float]
    assignment: Optional[tuple[float, ...]]
    nodes: int = 0


# --------------------------------------------------------------------------
# dense two-phase simplex over shifted nonnegative variables
# --------------------------------------------------------------------------

class _Unbounded(Exception):
    pass


def _pivot(T: np.ndarray, basis: np.ndarray, r: int, j: int) -> None:
    T[r, :] /= T[r, j]
    col = T[:, j].copy()
    col[r] = 0.0
    T -= np.outer(col, T[r, :])
    basis[r] = j


def _run_simplex(T: np.ndarray, basis: np.ndarray, n_enterable: int) -> None:
    """Pivot until the reduced-cost row is nonnegative over the enterable columns.

    Dantzig entering rule with Bland's rule fallback once DEGENERATE_LIMIT
    consecutive degenerate pivots occur.  Raises _Unbounded / DegeneratePivotError.
    """
    m = len(basis)
    bland = False
    degenerate_run = 0
    for _ in range(ITERATION_CAP):
        costs = T[-1, :n_enterable]
        candidates = np.flatnonzero(costs < -PIVOT_TOL)
        if candidates.size == 0:
            return
        j = int(candidates[0]) if bland else int(candidates[np.argmin(costs[candidates])])

        col = T[:m, j]
        eligible = col > PIVOT_TOL
        if not eligible.any():
            if (col > 1e-12).any():
                raise DegeneratePivotError("entering column has only sub-tolerance pivots")
            raise _Unbounded
        ratios = np.full(m, np.inf)
        ratios[eligible] = T[:m, -1][eligible] / col[eligible]
        r = int(np.argmin(ratios))
        if bland:
            tied = np.flatnonzero(ratios <= ratios[r] + 1e-12)
            r = int(tied[np.argmin(basis[tied])])

        if T[r, -1] <= PIVOT_TOL:
            degenerate_run += 1
            if degenerate_run > DEGENERATE_LIMIT:
                bland = True
        else:
            degenerate_run = 0
        _pivot(T, basis, r, j)
    raise DegeneratePivotError("simplex iteration cap exceeded")


def _solve_standard_lp(c: np.ndarray, A: np.ndarray, relations: list[str],
                       b: np.ndarray) -> tuple[str, Optional[np.ndarray]]:
    """min c.x  s.t.  A x <rel> b,  x >= 0.  Returns (status, x)."""
    m, n = A.shape
    A = A.copy()
    b = b.copy()
    relations = list(relations)
    for i in range(m):
        if b[i] < 0:
            A[i] = -A[i]
            b[i] = -b[i]
            relations[i] = {"<=": ">=", ">=": "<=", "=": "="}[relations[i]]

    slack_of: list[tuple[int, float]] = []  # (row, sign)
    art_rows: list[int] = []
    for i, rel in enumerate(relations):
        if rel == "<=":
            slack_of.append((i, 1.0))
        elif rel == ">=":
            slack_of.append((i, -1.0))
            art_rows.append(i)
        else:
            art_rows.append(i)
    n_slack = len(slack_of)
    n_art = len(art_rows)
    n_real = n + n_slack  # structural + slack columns survive into phase 2

    T = np.zeros((m + 1, n_real + n_art + 1))
    T[:m, :n] = A
    T[:m, -1] = b
    basis = np.full(m, -1, dtype=int)
    for k, (i, sign) in enumerate(slack_of):
        T[i, n + k] = sign
        if sign > 0:
            basis[i] = n + k
    for k, i in enumerate(art_rows):
        T[i, n_real + k] = 1.0
        basis[i] = n_real + k

    if n_art:
        # Phase 1: minimize the artificial sum; start from the all-artificial basis.
        T[-1, n_real:n_real + n_art] = 1.0
        for r in range(m):
            if basis[r] >= n_real:
                T[-1, :] -= T[r, :]
        try:
            _run_simplex(T, basis, n_enterable=n_real)
        except _Unbounded:  # phase-1 objective is bounded below by zero
            raise DegeneratePivotError("phase-1 relaxation reported unbounded")
        if -T[-1, -1] > LP_FEAS_TOL:
            return INFEASIBLE, None

        # Pivot leftover artificials out of the basis; a row that offers no
        # pivot is linearly dependent and gets dropped.
        keep = np.ones(m, dtype=bool)
        for r in range(m):
            if basis[r] >= n_real:
                options = np.flatnonzero(np.abs(T[r, :n_real]) > PIVOT_TOL)
                if options.size:
                    _pivot(T, basis, r, int(options[0]))
                else:
                    keep[r] = False
        if not keep.all():
            T = np.vstack([T[:m][keep], T[m:]])
            basis = basis[keep]
            m = len(basis)
        T = np.delete(T, np.s_[n_real:n_real + n_art], axis=1)

    # Phase 2 with the real objective.
    T[-1, :] = 0.0
    T[-1, :n] = c
    for r in range(m):
        cj = T[-1, basis[r]]
        if cj != 0.0:
            T[-1, :] -= cj * T[r, :]
    try:
        _run_simplex(T, basis, n_enterable=n_real)
    except _Unbounded:
        return UNBOUNDED, None

    x = np.zeros(n)
    for r in range(m):
        if basis[r] < n:
            x[basis[r]] = T[r, -1]
    return OPTIMAL, x


# --------------------------------------------------------------------------
# bound handling: shift to nonnegative variables, drop fixed columns
# --------------------------------------------------------------------------

def _model_arrays(model: MilpModel):
    cached = getattr(model, "_arrays", None)
    if cached is None:
        nv = model.num_vars
        A = np.array([row.coeffs for row in model.rows], dtype=float).reshape(len(model.rows), nv)
        b = np.array([row.rhs for row in model.rows], dtype=float)
        rels = [row.relation for row in model.rows]
        c = np.array(model.objective, dtype=float)
        lo = np.array([bnd[0] for bnd in model.bounds], dtype=float)
        hi = np.array([np.inf if bnd[1] is None else bnd[1] for bnd in model.bounds], dtype=float)
        cached = (A, b, rels, c, lo, hi)
        object.__setattr__(model, "_arrays", cached)
    return cached


def _solve_relaxation(model: MilpModel, fixes: Mapping[int, float]
                      ) -> tuple[str, Optional[float], Optional[np.ndarray]]:
    """Solve the LP relaxation with some variables pinned to fixed values.

    Fixed variables (including those whose bounds already coincide) are
    substituted out before the simplex runs.
    """
    A0, b0, rels0, c0, lo0, hi0 = _model_arrays(model)
    lo = lo0.copy()
    hi = hi0.copy()
    for j, v in fixes.items():
        lo[j] = hi[j] = float(v)
    if np.any(lo > hi + 1e-12):
        return INFEASIBLE, None, None

    free = np.flatnonzero(hi - lo > 0)
    b_shift = b0 - A0 @ lo
    A_free = A0[:, free]

    # Rows with no free variables are plain number comparisons now.
    if A_free.size:
        live = np.abs(A_free).max(axis=1) > 1e-12
    else:
        live = np.zeros(len(b_shift), dtype=bool)
    for r in np.flatnonzero(~live):
        resid = b_shift[r]
        tol = LP_FEAS_TOL * max(1.0, abs(b0[r]))
        rel = rels0[r]
        if (rel == "<=" and resid < -tol) or (rel == ">=" and resid > tol) \
                or (rel == "=" and abs(resid) > tol):
            return INFEASIBLE, None, None

    rows_A = [A_free[live]]
    rows_b = [b_shift[live]]
    rels = [rels0[r] for r in np.flatnonzero(live)]
    # Finite upper bounds of free variables become explicit rows.
    ub_idx = np.flatnonzero(np.isfinite(hi[free]))
    if ub_idx.size:
        ub_rows = np.zeros((len(ub_idx), len(free)))
        ub_rows[np.arange(len(ub_idx)), ub_idx] = 1.0
        rows_A.append(ub_rows)
        rows_b.append((hi[free] - lo[free])[ub_idx])
        rels.extend(["<="] * len(ub_idx))

    x_full = lo.copy()
    if free.size == 0:
        value = model.value_at(x_full)
        return OPTIMAL, value, x_full

    A = np.vstack(rows_A)
    b = np.concatenate(rows_b)
    status, u = _solve_standard_lp(c0[free], A, rels, b)
    if status != OPTIMAL:
        return status, None, None
    x_full[free] += u
    return OPTIMAL, model.value_at(x_full), x_full


def solve_lp(model: MilpModel) -> MilpSolution:
    """Solve the continuous relaxation (binaries relaxed to their [0, 1] bounds)."""
    status, value, x = _solve_relaxation(model, {})
    if status != OPTIMAL:
        return MilpSolution(status, None, None, nodes=1)
    return MilpSolution(OPTIMAL, value, tuple(map(float, x)), nodes=1)


# --------------------------------------------------------------------------
# branch and bound
# --------------------------------------------------------------------------

def _most_fractional(x: np.ndarray, binaries: Sequence[int],
                     fixes: Mapping[int, float]) -> int:
    """Index of the free binary farthest from an integer, or -1 if all integral.

    Ties go to the lowest index (strict improvement required to switch).
    """
    best_j = -1
    best_frac = INT_TOL
    for j in binaries:
        if j in fixes:
            continue
        frac = abs(x[j] - round(x[j]))
        if frac > best_frac:
            best_frac = frac
            best_j = j
    return best_j


def solve_milp(model: MilpModel, node_limit: int = DEFAULT_NODE_LIMIT) -> MilpSolution:
    """Globally optimal solution via best-bound branch and bound on the binaries.

    Node selection is best bound first, ties broken deeper-first then by
    creation order; branching picks the most fractional binary and explores
    the rounded-toward value first.
    """
    binaries = sorted(model.binaries)
    incumbent_val = math.inf
    incumbent_x: Optional[np.ndarray] = None
    nodes = 0
    seq = itertools.count()
    # heap entries: (lp bound of parent, -depth, sequence, fixes)
    heap: list[tuple[float, int, int, dict[int, float]]] = [(-math.inf, 0, next(seq), {})]

    while heap:
        bound, neg_depth, _, fixes = heapq.heappop(heap)
        if bound >= incumbent_val - IMPROVEMENT_EPS:
            continue  # cannot beat the incumbent
        if nodes >= node_limit:
            raise NodeLimitError(f"node limit {node_limit} exceeded")
        nodes += 1
        status, value, x = _solve_relaxation(model, fixes)
        if status == INFEASIBLE:
            continue
        if status == UNBOUNDED:
            return MilpSolution(UNBOUNDED, None, None, nodes)
        if value >= incumbent_val - IMPROVEMENT_EPS:
            continue

        j = _most_fractional(x, binaries, fixes)
        if j < 0:
            rounded = x.copy()
            for k in binaries:
                rounded[k] = float(round(rounded[k]))
            candidate = model.value_at(rounded)
            if candidate < incumbent_val - IMPROVEMENT_EPS:
                incumbent_val = candidate
                incumbent_x = rounded
            continue

        depth = -neg_depth + 1
        first = 1.0 if x[j] >= 0.5 else 0.0
        for branch_value in (first, 1.0 - first):
            child = dict(fixes)
            child[j] = branch_value
            heapq.heappush(heap, (value, -depth, next(seq), child))

    if incumbent_x is None:
        return MilpSolution(INFEASIBLE, None, None, nodes)
    return MilpSolution(OPTIMAL, incumbent_val, tuple(map(float, incumbent_x)), nodes)


def oracle_solve(model: MilpModel, max_binaries: int = ORACLE_MAX_BINARIES) -> MilpSolution:
    """Reference answer by brute force: try every 0/1 pattern of the binaries.

    Deliberately ignorant of bounds-based pruning so it stays an independent
    check on solve_milp.  Refuses more than max_binaries binaries.
    """
    binaries = sorted(model.binaries)
    if len(binaries) > max_binaries:
        raise OracleScopeError(
            f"{len(binaries)} binaries exceed the oracle's scope of {max_binaries}")
    best_val = math.inf
    best_x: Optional[np.ndarray] = None
    solves = 0
    for pattern in itertools.product((0.0, 1.0), repeat=len(binaries)):
        solves += 1
        status, value, x = _solve_relaxation(model, dict(zip(binaries, pattern)))
        if status == UNBOUNDED:
            return MilpSolution(UNBOUNDED, None, None, solves)
        if status == OPTIMAL and value < best_val:
            best_val = value
            best_x = x
    if best_x is None:
        return MilpSolution(INFEASIBLE, None, None, solves)
    return MilpSolution(OPTIMAL, best_val, tuple(map(float, best_x)), solves)
