"""Command-line front end.

Subcommands: solve, payoff, ideal, compare, oracle-check.  Exit codes:
0 = optimal, 1 = oracle-check mismatch, 2 = infeasible, 3 = parse/validation
error, 4 = resource limit hit.
"""

from __future__ import annotations

import argparse
import re
import sys

from .compromise import InfeasibleProblemError, build_payoff, compute_ideal
from .crisp import InvalidInstanceError, build_bi_objective
from .intervals import Interval
from .milp import NodeLimitError, OracleScopeError
from .model import FEASIBILITY_TOL
from .pipeline import CompetitorEntry, run_oracle_check, run_pipeline
from .problemfile import ProblemFileError, parse_instance
from .reporting import render_machine, render_oracle_check, render_text

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INFEASIBLE = 2
EXIT_BAD_INPUT = 3
EXIT_RESOURCE = 4

_COMPETITOR = re.compile(r"^(?P<name>[^=]+)=\[(?P<lo>[^,\]]+),(?P<hi>[^,\]]+)\]$")


def _parse_override(text: str) -> tuple[float, float, float, float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected L1,U1,L2,U2")
    try:
        l1, u1, l2, u2 = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-numeric payoff level in {text!r}") from None
    return l1, u1, l2, u2


def _parse_competitor(text: str) -> CompetitorEntry:
    match = _COMPETITOR.match(text.strip())
    if not match:
        raise argparse.ArgumentTypeError("expected name=[lo,hi]")
    try:
        interval = Interval(float(match.group("lo")), float(match.group("hi")))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return CompetitorEntry(match.group("name").strip(), interval)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ifctp",
        description="Solve interval fixed-charge transportation problems by "
                    "max-min compromise between expected cost and uncertainty.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, payoff=True):
        p.add_argument("file", help="problem file")
        p.add_argument("--report", choices=("text", "machine"), default="text")
        if payoff:
            p.add_argument("--override-payoff", type=_parse_override, metavar="L1,U1,L2,U2",
                           help="replace the computed payoff levels")
            p.add_argument("--tolerance", type=float, default=FEASIBILITY_TOL,
                           help="feasibility tolerance for the plan check")

    add_common(sub.add_parser("solve", help="full pipeline and report"))
    compare = sub.add_parser("compare", help="pipeline plus an external competitor entry")
    add_common(compare)
    compare.add_argument("--competitor", type=_parse_competitor, metavar="NAME=[lo,hi]",
                         required=True, help="competitor objective interval")
    add_common(sub.add_parser("payoff", help="payoff table only"), payoff=False)
    add_common(sub.add_parser("ideal", help="ideal point only"), payoff=False)
    add_common(sub.add_parser("oracle-check", help="cross-check solver vs enumeration"),
               payoff=False)
    return parser


def _load(path: str):
    try:
        with open(path) as handle:
            text = handle.read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_BAD_INPUT)
    return parse_instance(text)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        instance = _load(args.file)
        if args.command in ("solve", "compare"):
            report = run_pipeline(
                instance,
                payoff_override=args.override_payoff,
                competitor=getattr(args, "competitor", None),
                tolerance=args.tolerance,
            )
            render = render_machine if args.report == "machine" else render_text
            sys.stdout.write(render(report))
            return EXIT_OK if report.status == "optimal" else EXIT_INFEASIBLE
        if args.command == "payoff":
            payoff = build_payoff(build_bi_objective(instance))
            if args.report == "machine":
                sys.stdout.write(f"payoff.lower.best={payoff.best[0]!r}\n"
                                 f"payoff.lower.worst={payoff.worst[0]!r}\n"
                                 f"payoff.width.best={payoff.best[1]!r}\n"
                                 f"payoff.width.worst={payoff.worst[1]!r}\n")
            else:
                sys.stdout.write("payoff levels (best / worst):\n"
                                 f"  lower endpoint: {payoff.best[0]:.2f} / {payoff.worst[0]:.2f}\n"
                                 f"  width:          {payoff.best[1]:.2f} / {payoff.worst[1]:.2f}\n")
            return EXIT_OK
        if args.command == "ideal":
            ideal = compute_ideal(instance)
            if args.report == "machine":
                sys.stdout.write(f"ideal.center={ideal.center!r}\nideal.width={ideal.width!r}\n")
            else:
                sys.stdout.write(f"ideal point: center {ideal.center:.2f}, "
                                 f"width {ideal.width:.2f}\n")
            return EXIT_OK
        # oracle-check
        check = run_oracle_check(instance)
        sys.stdout.write(render_oracle_check(check))
        return EXIT_OK if check.passed else EXIT_CHECK_FAILED
    except ProblemFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except InvalidInstanceError as exc:
        print(f"error: invalid instance: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except InfeasibleProblemError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (NodeLimitError, OracleScopeError) as exc:
        print(f"error: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    raise SystemExit(main())
