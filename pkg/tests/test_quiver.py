"""Tests for quivers and their lattice matrices."""

import pytest

from fcy_workbench._dynkin import dynkin_quiver
from fcy_workbench._errors import WorkbenchError
from fcy_workbench._models import QuiverModel
from fcy_workbench._quiver import (
    Quiver,
    cartan_matrix,
    coxeter_matrix,
    cyclic_quiver,
    euler_form,
    euler_matrix,
    injective_classes,
    kronecker_quiver,
    matrix_order,
    path_quiver,
    projective_classes,
    serre_identity,
    simple_classes,
    tits_form,
)
from fcy_workbench._reps import hom_ext_dims, projective_rep

TEST_QUIVERS = [
    kronecker_quiver(2),
    kronecker_quiver(3),
    path_quiver(4, [0, 2]),
    path_quiver(5, [1, 2]),
    Quiver(4, ((0, 1), (0, 2), (3, 0))),
    dynkin_quiver("D", 4).quiver,
    dynkin_quiver("E", 8).quiver,
]
QUIVER_IDS = ["K2", "K3", "A4", "A5", "star", "D4", "E8"]


class TestQuiver:
    def test_kronecker_arrows(self, k2):
        assert k2.vertex_count == 2
        assert k2.arrows == ((0, 1), (0, 1))
        assert k2.acyclic

    def test_cyclic_is_not_acyclic(self):
        assert not cyclic_quiver(3).acyclic
        assert not cyclic_quiver(1).acyclic

    def test_disconnected_rejected(self):
        with pytest.raises(WorkbenchError, match="not connected"):
            Quiver(2, ())

    def test_arrow_out_of_range(self):
        with pytest.raises(WorkbenchError, match="out of range"):
            Quiver(2, ((0, 2),))

    def test_path_quiver_flips(self):
        assert path_quiver(3, [1]).arrows == ((0, 1), (2, 1))

    def test_model_roundtrip(self, k2):
        model = k2.to_model()
        assert model == QuiverModel(vertices=2, arrows=[[0, 1], [0, 1]])
        assert Quiver.from_model(model) == k2


class TestForms:
    def test_euler_form_kronecker(self, k2):
        assert euler_form(k2, (1, 1), (1, 1)) == 0
        assert euler_form(k2, (1, 0), (0, 1)) == -2
        assert euler_form(k2, (0, 1), (1, 0)) == 0

    def test_tits_form_roots(self, k2):
        assert tits_form(k2, (1, 2)) == 1
        assert tits_form(k2, (2, 3)) == 1

    def test_wrong_length(self, k2):
        with pytest.raises(WorkbenchError, match="length 2"):
            euler_form(k2, (1, 0, 0), (1, 0))


class TestMatrices:
    def test_cartan_counts_paths(self, k2):
        assert cartan_matrix(k2).rows() == ((1, 0), (2, 1))

    def test_cartan_a2(self):
        assert cartan_matrix(path_quiver(2)).rows() == ((1, 0), (1, 1))
        assert cartan_matrix(Quiver(1)).rows() == ((1,),)

    def test_cartan_requires_acyclic(self):
        with pytest.raises(WorkbenchError, match="oriented cycle") as exc_info:
            cartan_matrix(cyclic_quiver(2))
        assert exc_info.value.error_type == "CyclicQuiver"

    def test_euler_matrix_pairs_projectives_with_simples(self, k2):
        e = euler_matrix(cartan_matrix(k2))
        for v, p in enumerate(projective_classes(k2)):
            for w in range(2):
                s = tuple(1 if i == w else 0 for i in range(2))
                assert e.bilinear(p, s) == (1 if v == w else 0)

    def test_coxeter_a2(self):
        q = path_quiver(2)
        phi = coxeter_matrix(cartan_matrix(q))
        assert phi.rows() == ((0, -1), (1, -1))
        assert matrix_order(phi, 10) == 3

    def test_coxeter_sends_projectives_to_negative_injectives(self):
        q = path_quiver(4, [0, 2])
        phi = coxeter_matrix(cartan_matrix(q))
        for p, i in zip(projective_classes(q), injective_classes(q)):
            assert phi.apply(p) == tuple(-x for x in i)

    def test_kronecker_coxeter_has_no_finite_order(self, k2):
        assert matrix_order(coxeter_matrix(cartan_matrix(k2)), 50) is None

    @pytest.mark.parametrize(
        "d,e", [((1, 0), (0, 1)), ((2, 3), (1, 1)), ((0, 5), (4, -1))]
    )
    def test_serre_identity(self, k2, d, e):
        assert serre_identity(k2, d, e)


@pytest.mark.parametrize("q", [kronecker_quiver(3), path_quiver(5, [1, 2]), Quiver(4, ((0, 1), (0, 2), (3, 0)))])
def test_serre_identity_random_pairs(q, rng):
    n = q.vertex_count
    for _ in range(100):
        d = tuple(rng.randint(-4, 4) for _ in range(n))
        e = tuple(rng.randint(-4, 4) for _ in range(n))
        assert serre_identity(q, d, e)


@pytest.mark.parametrize("q", TEST_QUIVERS, ids=QUIVER_IDS)
def test_euler_form_on_projectives_counts_homs(q):
    projectives = projective_classes(q)
    reps = [projective_rep(q, v) for v in range(q.vertex_count)]
    for v, p_v in enumerate(projectives):
        assert reps[v].dims == p_v
        for w, p_w in enumerate(projectives):
            assert euler_form(q, p_v, p_w) == hom_ext_dims(reps[v], reps[w])[0]
        for w, s_w in enumerate(simple_classes(q)):
            assert euler_form(q, p_v, s_w) == (1 if v == w else 0)


@pytest.mark.parametrize("q", TEST_QUIVERS, ids=QUIVER_IDS)
def test_coxeter_sends_every_projective_to_negative_injective(q):
    phi = coxeter_matrix(cartan_matrix(q))
    for p, i in zip(projective_classes(q), injective_classes(q)):
        assert phi.apply(p) == tuple(-x for x in i)


@pytest.mark.parametrize("q", TEST_QUIVERS, ids=QUIVER_IDS)
def test_coxeter_preserves_euler_form(q, rng):
    phi = coxeter_matrix(cartan_matrix(q))
    n = q.vertex_count
    for _ in range(100):
        d = tuple(rng.randint(-4, 4) for _ in range(n))
        e = tuple(rng.randint(-4, 4) for _ in range(n))
        phi_d = tuple(int(x) for x in phi.apply(d))
        phi_e = tuple(int(x) for x in phi.apply(e))
        assert euler_form(q, phi_d, phi_e) == euler_form(q, d, e)
