import pytest

from conftest import make_complex
from src.algebra.modules import PresentationModule
from src.algebra.rings import ZZ_RING
from src.bockstein.comparison import epsilon_map, ptop2_check, theta_matrix
from src.bockstein.spectral import (bockstein_beta_matrix, bockstein_pages, bockstein_tables, generalized_bockstein, long_exact_window,
                                    recover_integral, relevant_primes)
from src.complexes.filtered import FilteredComplex
from src.exceptions import MissingPrimeError, NotPrimeError, SemanticError
from src.homology.coefficients import CoefficientSystem
from src.homology.groups import homology
from src.homology.persistence import persistence_indices

Z = CoefficientSystem.integral()


def page_dimensions(table, r, top):
    return tuple(table.dimension(r, n) for n in range(top + 1))


class TestBocksteinPages:
    def test_triangle_at_two(self, triangle_complex):
        table = bockstein_pages(triangle_complex, 2)
        assert table.pages == [1, 2, 3]
        assert page_dimensions(table, 1, 1) == (3, 3)
        assert page_dimensions(table, 2, 1) == (3, 3)
        assert page_dimensions(table, 3, 1) == (1, 1)
        assert table.rank(1, 1) == 0
        assert table.rank(2, 1) == 2
        assert table.r_stab == 3
        assert table.infinity == {0: 1, 1: 1}
        assert page_dimensions(table, 7, 1) == (1, 1)

    def test_triangle_at_three(self, triangle_complex):
        table = bockstein_pages(triangle_complex, 3)
        assert table.pages == [1]
        assert page_dimensions(table, 1, 1) == (1, 1)
        assert table.rank(1, 1) == 0
        assert table.r_stab == 1

    def test_extra_pages_repeat_infinity(self, triangle_complex):
        table = bockstein_pages(triangle_complex, 2, max_r=5)
        assert table.pages == [1, 2, 3, 4, 5]
        assert page_dimensions(table, 5, 1) == (1, 1)
        assert table.to_dict()['infinity'] == [1, 1]

    def test_rejects_composite(self, triangle_complex):
        with pytest.raises(NotPrimeError):
            bockstein_pages(triangle_complex, 4)

    def test_relevant_primes(self, triangle_complex, path_complex):
        assert relevant_primes(triangle_complex) == [2]
        assert relevant_primes(path_complex) == [2]

    def test_generalized_matches_integer_case(self, poly_triangle, triangle_complex):
        polynomial = generalized_bockstein(poly_triangle, "x")
        integral = bockstein_pages(triangle_complex, 2)
        assert polynomial.dimensions == integral.dimensions
        assert polynomial.ranks == integral.ranks
        assert polynomial.r_stab == 3
        assert polynomial.prime_label == "x"

    def test_generalized_needs_polynomial_weights(self, triangle_complex):
        with pytest.raises(SemanticError):
            generalized_bockstein(triangle_complex, 2)

    @pytest.mark.slow
    def test_pages_agree_on_random_complexes(self, torsion_corpus):
        for K in torsion_corpus[:40]:
            for p in (2, 3):
                table = bockstein_pages(K, p)
                integral = homology(K, Z, cross_check=False)
                for n in range(K.dimension + 1):
                    assert table.infinity[n] == integral.module(n).free_rank
                    assert table.dimension(1, n) == homology(K, CoefficientSystem.prime_field(p), cross_check=False).dimension(n)


class TestBocksteinHomomorphism:
    def test_detects_order_two(self, path_complex):
        assert bockstein_beta_matrix(path_complex, 2, 1).rank == 1
        assert bockstein_beta_matrix(path_complex, 3, 1).rank == 0

    def test_order_four_is_invisible_to_first_page(self, triangle_complex):
        assert bockstein_beta_matrix(triangle_complex, 2, 1).rank == 0

    @pytest.mark.slow
    def test_squares_to_zero(self, torsion_corpus):
        for K in torsion_corpus:
            for p in (2, 3):
                for n in range(2, K.dimension + 1):
                    upper = bockstein_beta_matrix(K, p, n).matrix
                    lower = bockstein_beta_matrix(K, p, n - 1).matrix
                    if 0 in (upper.nrows, upper.ncols, lower.nrows):
                        continue
                    composite = lower @ upper
                    assert all(x % p == 0 for column in composite.columns() for x in column)

    @pytest.mark.slow
    def test_long_exact_window(self, triangle_complex, torsion_corpus):
        for n in range(2):
            assert long_exact_window(triangle_complex, 2, n).is_exact
        for K in torsion_corpus[:30]:
            for p in (2, 3):
                for n in range(K.dimension + 1):
                    report = long_exact_window(K, p, n)
                    assert report.is_exact, [c.position for c in report.failures]


class TestIntegralRecovery:
    def test_triangle(self, triangle_complex):
        recovered = recover_integral([bockstein_pages(triangle_complex, 2)], primes=[2])
        assert recovered.module(0) == PresentationModule(ZZ_RING, 1, (4, 4))
        assert recovered.format() == "H0 = Z ⊕ Z/4 ⊕ Z/4; H1 = Z"

    def test_polynomial_triangle(self, poly_triangle, poly_ring):
        primes = relevant_primes(poly_triangle)
        assert [poly_ring.format(p) for p in primes] == ["x"]
        table = generalized_bockstein(poly_triangle, "x")
        assert page_dimensions(table, 2, 1) == (3, 3)
        assert table.rank(2, 1) == 2
        assert page_dimensions(table, 3, 1) == (1, 1)
        recovered = recover_integral([table], primes=primes)
        assert recovered.format() == "H0 = Q[x] ⊕ Q[x]/(x^2) ⊕ Q[x]/(x^2); H1 = Q[x]"
        assert recovered.matches(homology(poly_triangle, CoefficientSystem.integral(poly_ring), cross_check=False))

    def test_relevant_primes_of_composite_weight(self):
        K = make_complex(ZZ_RING, ["x", "y", "z"], {("x",): 1, ("y",): 6, ("z",): 1, ("x", "y"): 6, ("y", "z"): 6})
        assert homology(K, Z, cross_check=False).format() == "H0 = Z ⊕ Z/6; H1 = 0"
        assert relevant_primes(K) == [2, 3]
        recovered = recover_integral(bockstein_tables(K, [2, 3], max_workers=2), primes=[2, 3])
        assert recovered.module(0) == PresentationModule(ZZ_RING, 1, (6,))

    @pytest.mark.slow
    def test_round_trip(self, torsion_corpus):
        for K in torsion_corpus:
            primes = relevant_primes(K)
            tables = bockstein_tables(K, primes or [2], max_workers=2)
            recovered = recover_integral(tables, primes=primes)
            assert recovered.matches(homology(K, Z, cross_check=False))

    def test_missing_prime(self, triangle_complex):
        with pytest.raises(MissingPrimeError):
            recover_integral([bockstein_pages(triangle_complex, 3)], primes=[2])
        with pytest.raises(MissingPrimeError):
            recover_integral([])

    def test_tables_keep_prime_order(self, triangle_complex):
        tables = bockstein_tables(triangle_complex, [5, 2, 3], max_workers=3)
        assert [t.prime for t in tables] == [5, 2, 3]


class TestModSquareComparison:
    def test_edge_into_triangle(self, edge_into_triangle):
        report = ptop2_check(edge_into_triangle, 1, 0, 1, 2)
        assert not report.hypothesis_prev
        assert report.hypothesis_next
        assert not report.conclusion
        assert report.persistence_square == "Z/2"
        assert report.target_square == "Z/4"
        assert report.consistent
        assert not report.verdict
        assert report.image_matches_persistence

    def test_vertex_then_pair(self, vertex_then_pair):
        report = ptop2_check(vertex_then_pair, 0, 0, 1, 2)
        assert report.hypothesis_prev
        assert not report.hypothesis_next
        assert not report.conclusion
        assert report.consistent
        assert report.theta_prev is None

    def test_theta_and_epsilon(self, edge_into_triangle, vertex_then_pair):
        assert theta_matrix(edge_into_triangle, 0, 0, 1, 2).is_surjective
        assert not theta_matrix(edge_into_triangle, 0, 0, 1, 2).is_injective
        assert epsilon_map(vertex_then_pair, 0, 0, 1, 2).is_injective
        assert not epsilon_map(vertex_then_pair, 0, 0, 1, 2).is_surjective

    def test_trivial_filtration(self, triangle_complex):
        F = FilteredComplex.trivial(triangle_complex, 2)
        for k in range(2):
            report = ptop2_check(F, k, 0, 1, 2)
            assert report.verdict
            assert report.theta_k.is_isomorphism
            assert report.epsilon_k.is_isomorphism

    def test_report_dict(self, edge_into_triangle):
        data = ptop2_check(edge_into_triangle, 1, 0, 1, 2).to_dict()
        assert data['indices'] == {'k': 1, 'i': 0, 'q': 1}
        assert data['consistent'] is True
        assert data['theta_k']['injective'] is True

    @pytest.mark.slow
    @pytest.mark.parametrize("p, power, count", [(2, 1, 100), (3, 1, 20), (2, 2, 40)])
    def test_random_filtrations(self, random_filtrations, p, power, count):
        for F in random_filtrations[:count]:
            for k, i, q in persistence_indices(F):
                report = ptop2_check(F, k, i, q, p, power)
                assert report.consistent
                assert report.image_matches_persistence
                assert report.four_lemma_injective
                assert report.four_lemma_surjective
