"""Tests for the combinatorial derived category of Dynkin quivers."""

import pytest

from fcy_workbench._errors import WorkbenchError
from fcy_workbench._dynkin import (
    DerivedObject,
    DynkinQuiver,
    all_orientations,
    coxeter_number,
    cy_dimension,
    cy_row,
    cy_table,
    dynkin_quiver,
    objects,
    parse_diagram,
    serre_power,
    serre_power_is_shift,
    tau_derived,
    tau_inverse_derived,
    tau_power,
)
from fcy_workbench._quiver import path_quiver


class TestDiagrams:
    def test_parse(self):
        assert parse_diagram("E_6") == ("E", 6)
        assert parse_diagram("d4") == ("D", 4)

    def test_parse_rejects_garbage(self):
        with pytest.raises(WorkbenchError, match="Cannot parse"):
            parse_diagram("Z")

    def test_unknown_diagram(self):
        with pytest.raises(WorkbenchError, match="No Dynkin diagram D_3"):
            dynkin_quiver("D", 3)

    def test_wrong_graph(self):
        with pytest.raises(WorkbenchError, match="not D_4"):
            DynkinQuiver("D", 4, path_quiver(4))

    def test_orientation_length(self):
        with pytest.raises(WorkbenchError, match="orientations"):
            dynkin_quiver("A", 3, [True])

    def test_all_orientations(self):
        assert len(all_orientations("A", 3)) == 4
        assert len(all_orientations("D", 4)) == 8


class TestRoots:
    def test_a2(self, a2):
        assert a2.roots == ((0, 1), (1, 0), (1, 1))

    @pytest.mark.parametrize(
        "name,count",
        [("A1", 1), ("A4", 10), ("D4", 12), ("D5", 20), ("E6", 36), ("E7", 63), ("E8", 120)],
    )
    def test_root_counts(self, name, count):
        assert len(dynkin_quiver(*parse_diagram(name)).roots) == count


class TestTranslation:
    def test_projective_goes_to_shifted_injective(self, a2):
        p0 = DerivedObject((1, 1))
        assert tau_derived(p0, a2) == DerivedObject((1, 0), -1)

    def test_round_trip(self):
        dq = dynkin_quiver("D", 5, [False, True, False, True])
        for x in objects(dq, shifts=(-1, 0, 2)):
            assert tau_inverse_derived(tau_derived(x, dq), dq) == x

    def test_tau_h_is_shift_minus_two(self):
        dq = dynkin_quiver("E", 6)
        h = coxeter_number(dq)
        assert h == 12
        for x in objects(dq):
            assert tau_power(x, dq, h) == DerivedObject(x.root, x.shift - 2)

    def test_serre_power_inverse(self, a2):
        x = DerivedObject((1, 1), 3)
        assert serre_power(serre_power(x, a2, 5), a2, -5) == x


class TestCalabiYau:
    @pytest.mark.parametrize(
        "name,pair",
        [("A1", (1, 0)), ("A2", (3, 1)), ("A3", (4, 2)), ("D4", (3, 2)), ("D5", (8, 6)), ("E7", (9, 8))],
    )
    def test_minimal_pair(self, name, pair):
        assert cy_dimension(dynkin_quiver(*parse_diagram(name))) == pair

    def test_serre_h_is_shift(self):
        dq = dynkin_quiver("D", 4)
        assert serre_power_is_shift(dq, coxeter_number(dq)) == 4
        assert serre_power_is_shift(dq, 1) is None

    def test_orientation_independence(self):
        pairs = {cy_dimension(dq) for dq in all_orientations("A", 4)}
        assert pairs == {(5, 3)}

    def test_bound_exceeded(self):
        with pytest.raises(WorkbenchError, match="No period found up to 2"):
            cy_dimension(dynkin_quiver("A", 3), bound=2)

    def test_row(self, a2):
        row = cy_row(a2)
        assert row.model_dump(by_alias=True) == {
            "diagram": "A2",
            "coxeterNumber": 3,
            "n": 3,
            "m": 1,
            "reduced": "1/3",
            "serreHShift": 1,
        }

    def test_table_default(self):
        rows = cy_table()
        assert [r.diagram for r in rows][:3] == ["A1", "A2", "A3"]
        assert {r.diagram: r.coxeter_number for r in rows}["E8"] == 30
