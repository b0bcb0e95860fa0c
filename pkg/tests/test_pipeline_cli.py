import pathlib

import pytest

from _reference import COMPETITOR_1, COMPETITOR_1_DISTANCE, PAYOFF_OVERRIDE

from ifctp import (CompetitorEntry, Interval, OracleScopeError, check_plan,
                   run_oracle_check, run_pipeline)
from ifctp.cli import main
from ifctp.reporting import render_machine, render_text

DATA_DIR = pathlib.Path(__file__).resolve().parent / "data"

TINY_2X2 = """\
dims 2 2
cost 1 1 = [2,4] fixed [1,3]
cost 1 2 = [3,5] fixed [2,2]
cost 2 1 = [1,2] fixed [4,6]
cost 2 2 = [2,6] fixed [1,5]
supply 1 = [5,6]
supply 2 = [4,5]
demand 1 = [3,4]
demand 2 = [4,5]
"""

STARVED = """\
dims 1 1
cost 1 1 = [1,2] fixed [0,1]
supply 1 = [1,2]
demand 1 = [9,9]
"""


def _machine_dict(text):
    return dict(line.split("=", 1) for line in text.strip().splitlines())


def _reference_report(bench1, competitor=True):
    entry = CompetitorEntry("safi-razmjoo", Interval(*COMPETITOR_1)) if competitor else None
    return run_pipeline(bench1, payoff_override=PAYOFF_OVERRIDE, competitor=entry)


class TestRunPipeline:
    def test_full_report_fields(self, bench1):
        report = _reference_report(bench1)
        assert report.status == "optimal"
        assert (report.sources, report.destinations) == (3, 4)
        assert report.payoff.worst == (787.0, 190.0)
        assert report.plan is not None and check_plan(bench1, report.plan) == []
        assert report.plan_violations == ()

    def test_distance_recomputed_consistently(self, bench1):
        report = _reference_report(bench1)
        cw = report.center_width
        expected = ((cw.center - report.ideal.center) ** 2
                    + (cw.width - report.ideal.width) ** 2) ** 0.5
        assert report.distance == pytest.approx(expected, rel=1e-12)
        assert report.objective.hi == pytest.approx(
            report.objective.lo + 2 * cw.width, rel=1e-9)

    def test_competitor_distance(self, bench1):
        report = _reference_report(bench1)
        assert report.competitor_distance == pytest.approx(COMPETITOR_1_DISTANCE, abs=1e-9)
        assert report.distance < report.competitor_distance

    def test_infeasible_instance_reports_status(self):
        from ifctp import parse_instance
        report = run_pipeline(parse_instance(STARVED))
        assert report.status == "infeasible"
        assert report.plan is None and report.distance is None


class TestRendering:
    def test_text_golden(self, bench1):
        expected = (DATA_DIR / "golden_solve_text.txt").read_text()
        assert render_text(_reference_report(bench1)) == expected

    def test_machine_golden(self, bench1):
        expected = (DATA_DIR / "golden_solve_machine.txt").read_text()
        assert render_machine(_reference_report(bench1)) == expected

    def test_rendering_is_deterministic(self, bench1):
        report = _reference_report(bench1)
        assert render_text(report) == render_text(_reference_report(bench1))
        assert render_machine(report) == render_machine(_reference_report(bench1))

    def test_machine_format_is_flat_key_value(self, bench1):
        record = _machine_dict(render_machine(_reference_report(bench1)))
        assert record["status"] == "optimal"
        assert float(record["payoff.lower.worst"]) == 787.0
        assert float(record["competitor.distance"]) == pytest.approx(27.0)
        assert float(record["plan.y.1.1"]) == pytest.approx(20.0, abs=1e-6)

    def test_infeasible_text_render(self):
        from ifctp import parse_instance
        text = render_text(run_pipeline(parse_instance(STARVED)))
        assert "status: infeasible" in text


class TestOracleCheckApi:
    def test_small_instance_passes(self):
        from ifctp import parse_instance
        check = run_oracle_check(parse_instance(TINY_2X2))
        assert check.passed
        assert not check.dominated
        assert [line.name for line in check.lines] == \
            ["ideal-center", "ideal-width", "max-min level"]

    def test_scope_guard(self):
        from ifctp import IfctpInstance
        iv = Interval(1, 2)
        big = IfctpInstance([[iv] * 6] * 5, [[iv] * 6] * 5,
                            [Interval(50, 50)] * 5, [Interval(1, 1)] * 6)
        with pytest.raises(OracleScopeError):
            run_oracle_check(big)


class TestCli:
    def test_solve_text(self, bench1_path, capsys):
        code = main(["solve", str(bench1_path),
                     "--override-payoff", "640,787,163,190"])
        out = capsys.readouterr().out
        assert code == 0
        assert "status: optimal" in out
        assert "distance to ideal: 13.40" in out

    def test_solve_machine(self, bench1_path, capsys):
        code = main(["solve", str(bench1_path), "--report", "machine"])
        record = _machine_dict(capsys.readouterr().out)
        assert code == 0
        assert record["status"] == "optimal"
        assert float(record["ideal.center"]) == 830.0

    def test_tolerance_flag(self, bench1_path, capsys):
        code = main(["solve", str(bench1_path), "--tolerance", "1e-4"])
        out = capsys.readouterr().out
        assert code == 0
        assert "warning: plan check" not in out

    def test_compare(self, bench1_path, capsys):
        code = main(["compare", str(bench1_path),
                     "--override-payoff", "640,787,163,190",
                     "--competitor", "safi-razmjoo=[640,1020]"])
        out = capsys.readouterr().out
        assert code == 0
        assert "competitor safi-razmjoo" in out
        assert "distance 27.00" in out

    def test_payoff_subcommand(self, bench1_path, capsys):
        assert main(["payoff", str(bench1_path)]) == 0
        out = capsys.readouterr().out
        assert "640.00" in out and "787.00" in out

    def test_ideal_subcommand(self, bench1_path, capsys):
        assert main(["ideal", str(bench1_path), "--report", "machine"]) == 0
        record = _machine_dict(capsys.readouterr().out)
        assert record == {"ideal.center": "830.0", "ideal.width": "163.0"}

    def test_oracle_check_subcommand(self, tmp_path, capsys):
        path = tmp_path / "tiny.txt"
        path.write_text(TINY_2X2)
        assert main(["oracle-check", str(path)]) == 0
        assert "oracle check: PASS" in capsys.readouterr().out

    def test_parse_error_exit_code(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("dims 1 1\ncost 1 1 = [8,4] fixed [0,1]\n")
        assert main(["solve", str(path)]) == 3
        assert "lo > hi" in capsys.readouterr().err

    def test_missing_file_exit_code(self, tmp_path, capsys):
        with pytest.raises(SystemExit) as err:
            main(["solve", str(tmp_path / "nope.txt")])
        assert err.value.code == 3

    def test_infeasible_exit_code(self, tmp_path, capsys):
        path = tmp_path / "starved.txt"
        path.write_text(STARVED)
        assert main(["solve", str(path)]) == 2
        assert "status: infeasible" in capsys.readouterr().out

    def test_oracle_scope_exit_code(self, tmp_path, capsys):
        lines = ["dims 5 6"]
        lines += [f"cost {i} {j} = [1,2] fixed [0,1]"
                  for i in range(1, 6) for j in range(1, 7)]
        lines += [f"supply {i} = [50,50]" for i in range(1, 6)]
        lines += [f"demand {j} = [1,1]" for j in range(1, 7)]
        path = tmp_path / "big.txt"
        path.write_text("\n".join(lines) + "\n")
        assert main(["oracle-check", str(path)]) == 4
        assert "resource limit" in capsys.readouterr().err

    def test_bad_competitor_argument(self, bench1_path, capsys):
        with pytest.raises(SystemExit) as err:
            main(["compare", str(bench1_path), "--competitor", "nope"])
        assert err.value.code == 2  # argparse usage error
