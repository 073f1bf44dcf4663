"""Tests for the suite registry and shared case helpers."""

from fractions import Fraction

import pytest

from fcy_workbench._config import SuiteOptions
from fcy_workbench._errors import WorkbenchError
from fcy_workbench._suites import Suite, SuiteContext, SuiteRegistry, make_case
from fcy_workbench._suites._base import FAILURE_LIMIT, failures, plain
from fcy_workbench._suites._wpl import tubular_within
from fcy_workbench._wpl import TUBULAR_TYPES


class TestRegistry:
    def test_default_order(self, registry):
        assert registry.list_suites() == ["dynkin", "tube", "kronecker", "wpl", "twist", "torsion"]

    def test_has_suite(self, registry):
        assert registry.has_suite("tube")
        assert not registry.has_suite("braid")

    def test_unknown_suite(self, registry):
        with pytest.raises(WorkbenchError, match="Unknown suite: 'braid'"):
            registry.get("braid")

    def test_register_replaces(self):
        registry = SuiteRegistry()
        registry.register(Suite("x", "first", lambda ctx: []))
        registry.register(Suite("x", "second", lambda ctx: []))
        assert registry.list_suites() == ["x"]
        assert registry.get("x").description == "second"

    def test_tasks_are_built_from_options(self, registry, small_config):
        ctx = SuiteContext(seed=1, samples=5, options=small_config.suites)
        assert len(registry.get("tube").tasks(ctx)) == len(small_config.suites.tube.ranks)


class TestCases:
    def test_plain(self):
        assert plain(Fraction(4, 2)) == 2
        assert plain(Fraction(-1, 42)) == "-1/42"
        assert plain({"a": (1, Fraction(1, 2))}) == {"a": [1, "1/2"]}

    def test_make_case_compares_plain_values(self):
        case = make_case("x/y", {"v": (1, 2)}, [0, 1], (Fraction(0), Fraction(1)))
        assert case.passed
        assert case.inputs == {"v": [1, 2]}

    def test_make_case_failure(self):
        case = make_case("x/y", {}, 2, 3)
        assert not case.passed
        assert case.expected == 2
        assert case.got == 3

    def test_failures_are_capped(self):
        found = failures(range(100), lambda k: k % 2 == 0)
        assert len(found) == FAILURE_LIMIT
        assert found[:3] == ["0", "2", "4"]


class TestTubularScan:
    def test_expected_types_follow_the_bound(self):
        assert tubular_within(7) == []
        assert tubular_within(9) == [(2, 2, 2, 2), (3, 3, 3)]
        assert tubular_within(11) == sorted(TUBULAR_TYPES)

    @pytest.mark.parametrize("max_sum", [7, 9, 10, 12])
    def test_scan_passes_below_every_bound(self, registry, max_sum):
        options = SuiteOptions.model_validate({"wpl": {"weights": [], "max_sum": max_sum}})
        ctx = SuiteContext(seed=1, samples=1, options=options)
        cases = [case for task in registry.get("wpl").tasks(ctx) for case in task()]
        scan = next(case for case in cases if case.id == "wpl/tubular_scan")
        assert scan.passed
