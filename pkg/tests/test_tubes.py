"""Tests for tube objects and closed-form Hom/Ext^1."""

from fractions import Fraction

import pytest

from fcy_workbench._errors import WorkbenchError
from fcy_workbench._models import TubeObjectModel
from fcy_workbench._reps import hom_ext_dims, is_nilpotent
from fcy_workbench._tubes import (
    TubeObject,
    cy_pair,
    ext1_dim_closed,
    hom_dim,
    is_exceptional,
    is_generalized_1_spherical,
    length_gives_homs,
    objects,
    peripheral_objects,
    tau,
    tau_inverse,
    tau_orbit_size,
    tau_power,
    to_rep,
)


class TestTubeObject:
    def test_validation(self):
        with pytest.raises(ValueError, match="Socle"):
            TubeObject(3, 3, 1)
        with pytest.raises(ValueError, match="Length"):
            TubeObject(3, 0, 0)
        with pytest.raises(ValueError, match="rank"):
            TubeObject(0, 0, 1)

    def test_top_and_str(self):
        x = TubeObject(3, 0, 2)
        assert x.top == 2
        assert str(x) == "(0,2)/r3"
        assert not x.is_peripheral

    def test_model_roundtrip(self):
        x = TubeObject(4, 1, 5)
        assert x.to_model() == TubeObjectModel(rank=4, socle=1, length=5)
        assert TubeObject.from_model(x.to_model()) == x

    def test_objects_count(self):
        assert len(objects(3, 4)) == 12
        assert all(x.is_peripheral for x in peripheral_objects(5))


class TestTranslation:
    @pytest.mark.parametrize("r", [1, 2, 3, 5])
    def test_tau_period(self, r):
        for x in objects(r, 3):
            assert tau_power(x, r) == x
            assert tau_orbit_size(x) == r
            assert tau_inverse(tau(x)) == x


class TestHomExt:
    def test_simples(self):
        s = peripheral_objects(3)
        assert [hom_dim(s[0], y) for y in s] == [1, 0, 0]
        assert [ext1_dim_closed(s[0], y) for y in s] == [0, 1, 0]

    def test_self_hom_counts_wraps(self):
        assert hom_dim(TubeObject(2, 0, 3), TubeObject(2, 0, 3)) == 2
        assert hom_dim(TubeObject(1, 0, 4), TubeObject(1, 0, 4)) == 4

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_closed_form_matches_linear_algebra(self, r):
        objs = objects(r, 3)
        for x in objs:
            for y in objs:
                assert hom_ext_dims(to_rep(x), to_rep(y)) == (hom_dim(x, y), ext1_dim_closed(x, y))

    def test_to_rep_is_nilpotent(self):
        rep = to_rep(TubeObject(2, 0, 3))
        assert rep.dims == (2, 1)
        assert is_nilpotent(rep)

    def test_rank_mismatch(self):
        with pytest.raises(WorkbenchError, match="Tube ranks differ"):
            hom_dim(TubeObject(2, 0, 1), TubeObject(3, 0, 1))

    def test_exceptional_below_rank(self):
        assert is_exceptional(TubeObject(3, 1, 2))
        assert not is_exceptional(TubeObject(3, 1, 3))

    def test_length_gives_homs(self):
        assert length_gives_homs(TubeObject(3, 0, 1), TubeObject(3, 2, 2)) == (2, 1)


class TestSpherical:
    def test_peripheral_objects_are_spherical(self):
        assert is_generalized_1_spherical(peripheral_objects(3)) == (True, (1, 2, 0))
        assert is_generalized_1_spherical(peripheral_objects(1)) == (True, (0,))

    def test_non_orthogonal_family(self):
        ok, sigma = is_generalized_1_spherical([TubeObject(3, 0, 1), TubeObject(3, 0, 2)])
        assert not ok
        assert sigma is None

    def test_empty_family(self):
        assert is_generalized_1_spherical([]) == (False, None)

    def test_single_simple_in_rank_two_tube(self):
        # Ext^1(S, S) = 0 here, so no permutation exists
        assert is_generalized_1_spherical([TubeObject(2, 0, 1)]) == (False, None)


def test_cy_pair():
    assert cy_pair(4) == (4, 4, Fraction(1))
