"""Interval fixed-charge transportation: crispification, compromise, ideal point.

Typical use::

    from ifctp import parse_instance, run_pipeline
    report = run_pipeline(parse_instance(open("problem.txt").read()))
    print(report.distance)
"""

from .compromise import (CompromiseResult, InfeasibleProblemError, PayoffTable,
                         build_payoff, build_max_min_model, compute_ideal,
                         membership, solve_compromise)
from .crisp import (BiObjectiveMilp, InvalidInstanceError, LinearObjective,
                    build_bi_objective, build_single_objective,
                    evaluate_interval_objective, extract_plan)
from .intervals import CenterWidth, Interval, Preference, distance_to_ideal, prefer
from .milp import (DegeneratePivotError, MilpModel, MilpSolution, NodeLimitError,
                   OracleScopeError, Row, oracle_solve, solve_lp, solve_milp)
from .model import (FctpInstance, IfctpInstance, ShipmentPlan, check_plan, validate)
from .pipeline import (CompetitorEntry, CompromiseReport, OracleCheck,
                       run_oracle_check, run_pipeline)
from .problemfile import ProblemFileError, parse_instance, render_instance
from .reporting import render_machine, render_oracle_check, render_text

__all__ = [
    "BiObjectiveMilp", "CenterWidth", "CompetitorEntry", "CompromiseReport",
    "CompromiseResult", "DegeneratePivotError", "FctpInstance", "IfctpInstance",
    "InfeasibleProblemError", "Interval", "InvalidInstanceError", "LinearObjective",
    "MilpModel", "MilpSolution", "NodeLimitError", "OracleCheck", "OracleScopeError",
    "PayoffTable", "Preference", "ProblemFileError", "Row", "ShipmentPlan",
    "build_bi_objective", "build_payoff", "build_max_min_model",
    "build_single_objective", "check_plan", "compute_ideal", "distance_to_ideal",
    "evaluate_interval_objective", "extract_plan", "membership", "oracle_solve",
    "parse_instance", "prefer", "render_instance", "render_machine",
    "render_oracle_check", "render_text", "run_oracle_check", "run_pipeline",
    "solve_compromise", "solve_lp", "solve_milp", "validate",
]

__version__ = "0.1.0"
