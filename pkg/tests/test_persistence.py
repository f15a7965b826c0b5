import pytest

from src.algebra.modules import PresentationModule
from src.algebra.rings import ZZ_RING
from src.complexes.filtered import FilteredComplex
from src.exceptions import StepIndexError
from src.homology.coefficients import CoefficientSystem
from src.homology.groups import homology
from src.homology.persistence import eta_image, inclusion_map, persistence_indices, persistent_homology
from src.scripts.persistence_table import persistence_table, single_persistence

F2 = CoefficientSystem.prime_field(2)
Z4 = CoefficientSystem.quotient(4)


def cyclic(*orders):
    return PresentationModule.canonical(ZZ_RING, 0, list(orders))


class TestEdgeIntoTriangle:
    def test_mod_two_groups(self, edge_into_triangle):
        F = edge_into_triangle
        assert persistent_homology(F, 0, 0, 0, F2).module == cyclic(2, 2)
        assert persistent_homology(F, 0, 0, 1, F2).module == cyclic(2)
        assert persistent_homology(F, 1, 1, 0, F2).module == cyclic(2)
        assert persistent_homology(F, 1, 0, 1, F2).module == cyclic(2)

    def test_mod_four_groups(self, edge_into_triangle):
        F = edge_into_triangle
        assert persistent_homology(F, 1, 1, 0, Z4).module == cyclic(4)
        # the surviving cycle of the edge is 2·[v0,v1], which has order 2 mod 4;
        # the value usually quoted for this group is 0
        assert persistent_homology(F, 1, 0, 1, Z4).module == cyclic(2)

    def test_inclusion_collapses_components(self, edge_into_triangle):
        theta = inclusion_map(edge_into_triangle, 0, 0, 1, F2)
        assert theta.is_surjective
        assert not theta.is_injective

    def test_surviving_cycle_has_dimension_one(self, edge_into_triangle):
        assert eta_image(edge_into_triangle, 1, 0, 1, F2).num_generators == 1


class TestVertexThenPair:
    def test_groups(self, vertex_then_pair):
        F = vertex_then_pair
        assert persistent_homology(F, 0, 0, 1, F2).module == cyclic(2)
        assert persistent_homology(F, 0, 1, 0, F2).module == cyclic(2, 2)
        assert persistent_homology(F, 0, 0, 1, Z4).module == cyclic(4)
        assert persistent_homology(F, 0, 1, 0, Z4).module == cyclic(4, 4)

    def test_inclusion_is_injective_only(self, vertex_then_pair):
        theta = inclusion_map(vertex_then_pair, 0, 0, 1, F2)
        assert theta.is_injective
        assert not theta.is_surjective
        assert eta_image(vertex_then_pair, 0, 0, 1, F2).num_generators == 1


class TestPersistenceProperties:
    def test_zero_lag_is_step_homology(self, edge_into_triangle):
        for i in range(edge_into_triangle.num_steps):
            step = homology(edge_into_triangle.step_complex(i), CoefficientSystem.integral(), cross_check=False)
            for k in range(2):
                assert persistent_homology(edge_into_triangle, k, i, 0, CoefficientSystem.integral()).module == step.module(k)

    def test_trivial_filtration(self, triangle_complex):
        F = FilteredComplex.trivial(triangle_complex, 2)
        integral = homology(triangle_complex, CoefficientSystem.integral())
        for k in range(2):
            assert eta_image(F, k, 0, 1, CoefficientSystem.integral()) == integral.module(k)
            assert inclusion_map(F, k, 0, 1, F2).is_isomorphism

    @pytest.mark.slow
    @pytest.mark.parametrize("coeff", [CoefficientSystem.integral(), F2, Z4, CoefficientSystem.rational()], ids=["Z", "F2", "Z4", "Q"])
    def test_image_matches_persistence(self, random_filtrations, coeff):
        for F in random_filtrations[:25]:
            for k, i, q in persistence_indices(F):
                assert persistent_homology(F, k, i, q, coeff).module == eta_image(F, k, i, q, coeff)

    def test_index_errors(self, edge_into_triangle):
        with pytest.raises(StepIndexError):
            persistent_homology(edge_into_triangle, 0, 0, -1, F2)
        with pytest.raises(StepIndexError):
            persistent_homology(edge_into_triangle, 0, 1, 1, F2)
        with pytest.raises(StepIndexError):
            inclusion_map(edge_into_triangle, 0, 2, 0, F2)

    def test_indices(self, edge_into_triangle):
        assert persistence_indices(edge_into_triangle) == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 0, 1), (1, 1, 0)]


class TestPersistenceTable:
    def test_rows_follow_index_order(self, edge_into_triangle):
        rows = persistence_table(edge_into_triangle, F2, max_workers=3)
        assert [(r.k, r.i, r.q) for r in rows] == persistence_indices(edge_into_triangle)
        assert rows[0].group == "Z/2 ⊕ Z/2"

    def test_single_row(self, triangle_complex):
        row = single_persistence(FilteredComplex.trivial(triangle_complex), CoefficientSystem.integral(), 0, 0, 0)
        assert row.free_rank == 1
        assert row.torsion == ["4", "4"]
