import pytest

from conftest import BENCH1_DEMAND, BENCH1_SUPPLY

from ifctp import IfctpInstance, Interval, ShipmentPlan, check_plan, validate


def _raw_interval(lo, hi):
    """Bypass constructor validation to simulate a corrupted interval."""
    iv = object.__new__(Interval)
    object.__setattr__(iv, "lo", lo)
    object.__setattr__(iv, "hi", hi)
    return iv


def _tiny(unit=None, fixed=None, supply=None, demand=None):
    return IfctpInstance(
        unit or [[Interval(1, 2)]],
        fixed or [[Interval(1, 3)]],
        supply or [Interval(5, 5)],
        demand or [Interval(4, 4)],
    )


class TestValidate:
    def test_bench1_is_valid(self, bench1):
        assert validate(bench1) == []
        # aggregate check backing the instance: upper supplies cover lower demands
        assert sum(hi for _, hi in BENCH1_SUPPLY) == 86
        assert sum(lo for lo, _ in BENCH1_DEMAND) == 82

    def test_aggregate_shortfall(self):
        inst = _tiny(demand=[Interval(10, 10)])
        assert validate(inst) == ["aggregate supply 5 < aggregate demand 10"]
        assert validate(inst, check_aggregate=False) == []

    def test_corrupted_interval_reported(self):
        inst = _tiny(unit=[[_raw_interval(8, 4)]])
        assert validate(inst) == ["unit_cost(1,1): interval lo 8 > hi 4"]

    def test_negative_fixed_charge(self):
        inst = _tiny(fixed=[[Interval(-1, 3)]])
        assert validate(inst) == ["fixed_charge(1,1): negative lower endpoint -1"]

    def test_negative_supply_and_demand(self):
        inst = _tiny(supply=[Interval(-2, 5)], demand=[Interval(-3, 4)])
        got = validate(inst)
        assert got == [
            "supply(1): negative lower endpoint -2",
            "demand(1): negative lower endpoint -3",
        ]

    def test_violation_order_is_row_major(self):
        unit = [[Interval(1, 2), _raw_interval(9, 3)],
                [_raw_interval(7, 1), Interval(1, 2)]]
        fixed = [[Interval(0, 1), Interval(0, 1)], [Interval(0, 1), _raw_interval(5, 2)]]
        inst = IfctpInstance(unit, fixed, [Interval(9, 9), Interval(9, 9)],
                             [Interval(1, 1), Interval(1, 1)])
        got = validate(inst)
        assert [v.split(":")[0] for v in got] == [
            "unit_cost(1,2)", "unit_cost(2,1)", "fixed_charge(2,2)"]

    def test_dimension_mismatch(self):
        inst = _tiny(supply=[Interval(5, 5), Interval(2, 2)])
        assert any("rows" in v or "supply" in v for v in validate(inst))

    def test_validate_is_deterministic(self, bench1):
        assert validate(bench1) == validate(bench1)


class TestCheckPlan:
    def test_reference_plan_has_one_rounding_violation(self, bench1, reference_plan):
        # published quantities sum to 18.99 in column 2; flagged at default tolerance
        got = check_plan(bench1, reference_plan)
        assert got == ["column 2 receives 18.99 < demand floor 19"]
        assert check_plan(bench1, reference_plan, tol=0.02) == []

    def test_all_zero_plan_misses_every_demand(self, bench1):
        plan = ShipmentPlan.from_quantities([[0] * 4 for _ in range(3)])
        got = check_plan(bench1, plan)
        assert len(got) == 4
        assert all("demand floor" in v for v in got)

    def test_supply_cap_violation(self, bench1):
        plan = ShipmentPlan.from_quantities(
            [[82, 0, 23, 0], [0, 8, 0, 20], [0, 11, 0, 0]])
        got = check_plan(bench1, plan)
        assert len(got) == 1
        assert "row 1" in got[0] and "33" in got[0]

    def test_linking_rule(self, bench1):
        y = [[20, 0, 23, 0], [0, 19, 0, 20], [0, 0, 0, 0]]
        x = [[1, 1, 1, 0], [0, 1, 0, 1], [0, 0, 0, 0]]  # (1,2) open but unused
        got = check_plan(bench1, ShipmentPlan(y, x))
        assert "route (1,2) is activated but ships nothing" in got
        x2 = [[0, 0, 1, 0], [0, 1, 0, 1], [0, 0, 0, 0]]  # (1,1) used but closed
        got2 = check_plan(bench1, ShipmentPlan(y, x2))
        assert "route (1,1) ships 20 but is not activated" in got2

    def test_non_binary_activation(self, bench1):
        y = [[20, 0, 23, 0], [0, 19, 0, 20], [0, 0, 0, 0]]
        x = [[0.5, 0, 1, 0], [0, 1, 0, 1], [0, 0, 0, 0]]
        assert any("not binary" in v for v in check_plan(bench1, ShipmentPlan(y, x)))

    def test_dimension_mismatch_raises(self, bench1):
        plan = ShipmentPlan.from_quantities([[1, 2], [3, 4]])
        with pytest.raises(ValueError, match="shape"):
            check_plan(bench1, plan)

    def test_from_quantities_derives_activations(self):
        plan = ShipmentPlan.from_quantities([[0.0, 3.5], [1e-9, 2.0]])
        assert plan.x == ((0, 1), (0, 1))


class TestFctpInstance:
    def test_crisp_instance_lifts_to_degenerate_intervals(self):
        from ifctp import FctpInstance
        crisp = FctpInstance([[2.0, 3.0]], [[1.0, 4.0]], [7.0], [3.0, 4.0])
        lifted = crisp.as_interval_instance()
        assert validate(lifted) == []
        assert lifted.is_crisp()
        assert lifted.unit_cost[0][1] == Interval(3.0, 3.0)
        assert lifted.supply[0] == Interval(7.0, 7.0)

    def test_lifted_instance_solves_like_plain_fctp(self):
        from ifctp import FctpInstance, build_single_objective, solve_milp
        crisp = FctpInstance([[2.0, 3.0]], [[1.0, 4.0]], [7.0], [3.0, 4.0])
        sol = solve_milp(build_single_objective(crisp.as_interval_instance(), "center"))
        # cheapest: 3 units at 2 (+1 fixed), 4 at 3 (+4 fixed)
        assert sol.objective_value == pytest.approx(2 * 3 + 1 + 3 * 4 + 4)
