import random

import pytest

from conftest import make_complex
from src.algebra.rings import ZZ_RING, MultivariatePolynomialRing, RationalPolynomialRing
from src.complexes.clique import CliqueComplexBuilder, clique_complex
from src.complexes.filtered import FilteredComplex
from src.complexes.random_complexes import random_cover, random_filtration, random_weighted_complex
from src.complexes.simplex import Simplex
from src.complexes.weighted_complex import WeightedComplex, close_faces
from src.exceptions import ComplexTooLargeError, ComplexValidationError, StepIndexError, ZeroWeightError


class TestSimplex:
    def test_of_sorts_vertices(self):
        assert Simplex.of([2, 0, 1]).vertices == (0, 1, 2)

    def test_rejects_repeats_and_empty(self):
        with pytest.raises(ComplexValidationError):
            Simplex.of([1, 1])
        with pytest.raises(ComplexValidationError):
            Simplex(())

    def test_faces_delete_one_vertex(self):
        s = Simplex((0, 1, 2))
        assert s.faces() == [(0, Simplex((1, 2))), (1, Simplex((0, 2))), (2, Simplex((0, 1)))]
        assert Simplex((3,)).faces() == []

    def test_proper_faces(self):
        assert len(list(Simplex((0, 1, 2)).proper_faces())) == 6


class TestWeightedComplex:
    def test_valid_complex(self, triangle_complex):
        report = triangle_complex.validate()
        assert report.is_valid
        assert triangle_complex.dimension == 1
        assert len(triangle_complex) == 6

    def test_divisibility_violation(self):
        K = make_complex(ZZ_RING, ["a", "b"], {("a",): 3, ("b",): 1, ("a", "b"): 4})
        report = K.validate()
        assert report.divisibility_violations == [(Simplex((0,)), Simplex((0, 1)))]
        with pytest.raises(ComplexValidationError):
            K.require_valid()

    def test_closure_violation(self):
        K = make_complex(ZZ_RING, ["a", "b"], {("a",): 1, ("a", "b"): 2})
        report = K.validate()
        assert report.closure_violations == [(Simplex((0, 1)), Simplex((1,)))]
        assert not K.is_closed()

    def test_zero_weight_is_only_a_warning(self):
        K = make_complex(ZZ_RING, ["a", "b"], {("a",): 1, ("b",): 1, ("a", "b"): 0})
        report = K.validate()
        assert report.is_valid
        assert report.zero_weight_warnings == [Simplex((0, 1))]

    def test_close_faces_adds_unit_weights(self):
        closed = close_faces(ZZ_RING, {Simplex((0, 1, 2)): 6})
        assert len(closed) == 7
        assert closed[Simplex((0, 2))] == 1

    def test_simplex_cap(self, monkeypatch):
        monkeypatch.setenv("WPH_MAX_SIMPLICES", "3")
        with pytest.raises(ComplexTooLargeError):
            make_complex(ZZ_RING, ["a", "b", "c"], {("a",): 1, ("b",): 1, ("c",): 1, ("a", "b"): 1})

    def test_unknown_vertex(self):
        with pytest.raises(ComplexValidationError):
            WeightedComplex(ZZ_RING, ["a"], {Simplex((0, 1)): 1})

    def test_subcomplex_excluding_ideal(self, triangle_complex):
        kept = triangle_complex.subcomplex_excluding_ideal([4])
        assert kept.simplices == triangle_complex.simplices_of_dim(0)
        assert kept.validate().is_valid

    def test_nested_ideals_give_nested_subcomplexes(self, triangle_complex):
        without_even = triangle_complex.subcomplex_excluding_ideal([2])
        without_eights = triangle_complex.subcomplex_excluding_ideal([8])
        assert without_even.simplex_set() <= without_eights.simplex_set()
        assert without_eights == triangle_complex

    def test_specialize_weights(self):
        ring = MultivariatePolynomialRing(["x", "y"])
        K = make_complex(ring, ["x", "y"], {("x",): "x", ("y",): "y", ("x", "y"): "x*y"})
        special = K.specialize_weights()
        target = RationalPolynomialRing("x")
        assert special.ring == target
        assert special.weight(Simplex((0, 1))) == target.parse("x^2")

    def test_specialize_rejects_vanishing_weight(self):
        ring = MultivariatePolynomialRing(["x", "y"])
        K = make_complex(ring, ["x", "y"], {("x",): "1", ("y",): "1", ("x", "y"): "x - y"})
        with pytest.raises(ZeroWeightError):
            K.specialize_weights()

    def test_labels(self, triangle_complex):
        s = triangle_complex.simplex_from_labels(["v2", "v0"])
        assert s == Simplex((0, 2))
        assert triangle_complex.label(s) == "[v0,v2]"
        with pytest.raises(ComplexValidationError):
            triangle_complex.simplex_from_labels(["v9"])


class TestCliqueComplex:
    def test_triangle_graph(self):
        simplices = clique_complex(4, [(0, 1), (1, 2), (0, 2), (2, 3)], max_dim=2)
        assert Simplex((0, 1, 2)) in simplices
        assert len([s for s in simplices if s.dimension == 1]) == 4
        assert len(simplices) == 9

    def test_max_dim_truncates(self):
        edges = [(a, b) for a in range(4) for b in range(a + 1, 4)]
        assert max(s.dimension for s in clique_complex(4, edges, max_dim=1)) == 1
        assert max(s.dimension for s in clique_complex(4, edges, max_dim=3)) == 3

    def test_rejects_bad_edges(self):
        with pytest.raises(ComplexValidationError):
            clique_complex(2, [(0, 0)], 1)
        with pytest.raises(ComplexValidationError):
            clique_complex(2, [(0, 1), (1, 0)], 1)

    def test_build_counter(self):
        builder = CliqueComplexBuilder()
        builder.build(3, [(0, 1)], 1)
        assert builder.build_count == 1


class TestFilteredComplex:
    def test_step_complexes(self, edge_into_triangle):
        first = edge_into_triangle.step_complex(0)
        assert first.simplices == [Simplex((0,)), Simplex((1,)), Simplex((0, 1))]
        assert first.weight(Simplex((0, 1))) == 2
        assert edge_into_triangle.step_complex(1) == edge_into_triangle.complex

    def test_steps_are_nested(self, edge_into_triangle):
        steps = edge_into_triangle.steps()
        assert steps[0].simplex_set() <= steps[1].simplex_set()

    def test_trivial_filtration(self, triangle_complex):
        F = FilteredComplex.trivial(triangle_complex, 3)
        assert F.step_complex(0) == triangle_complex

    def test_face_born_after_coface(self, triangle_complex):
        births = {s: 0 for s in triangle_complex.simplices}
        births[Simplex((0,))] = 1
        with pytest.raises(ComplexValidationError):
            FilteredComplex(triangle_complex, births, 2)

    def test_step_out_of_range(self, edge_into_triangle):
        with pytest.raises(StepIndexError):
            edge_into_triangle.step_complex(2)

    def test_from_steps(self, edge_into_triangle):
        rebuilt = FilteredComplex.from_steps(edge_into_triangle.steps())
        assert rebuilt == edge_into_triangle


class TestRandomComplexes:
    def test_generated_complexes_are_valid(self):
        rng = random.Random(7)
        for _ in range(50):
            K = random_weighted_complex(rng, num_vertices=6, max_dim=3, max_simplices=30)
            assert K.validate().is_valid
            assert len(K) <= 30

    def test_seed_reproduces(self):
        a = random_weighted_complex(random.Random(3))
        b = random_weighted_complex(random.Random(3))
        assert a == b

    def test_random_filtration_and_cover(self):
        rng = random.Random(11)
        K = random_weighted_complex(rng)
        F = random_filtration(rng, K, num_steps=4)
        assert F.step_complex(3) == K
        k0, k1 = random_cover(rng, K)
        assert set(k0) | set(k1) == K.simplex_set()
