import pytest

from src.algebra.matrix import Matrix
from src.algebra.modules import PresentationModule, p_primary_exponents, tensor_quotient, tor_quotient, universal_coefficient_module
from src.algebra.monomials import monomial_divides, monomial_ideal_contains, poly_divmod
from src.algebra.normal_forms import cokernel, hermite_solve, kernel_basis, rank_mod, smith_normal_form
from src.algebra.rings import QQ_FIELD, ZZ_RING, MultivariatePolynomialRing, RationalPolynomialRing, RingFactory
from src.complexes.ideals import MonomialIdeal, PrincipalIdeal, make_ideal
from src.exceptions import InexactDivisionError, NotPrimeError, ParseError


class TestRings:
    def test_integer_gcd_is_normalized(self):
        assert ZZ_RING.gcd(-4, 6) == 2
        assert ZZ_RING.lcm(4, 6) == 12

    def test_integer_valuation(self):
        assert ZZ_RING.valuation(48, 2) == 4
        assert ZZ_RING.valuation(48, 5) == 0

    def test_exact_division_rejects_remainder(self):
        assert ZZ_RING.exact_div(12, 4) == 3
        with pytest.raises(InexactDivisionError):
            ZZ_RING.exact_div(12, 5)

    def test_require_prime(self):
        assert ZZ_RING.require_prime(-3) == 3
        with pytest.raises(NotPrimeError):
            ZZ_RING.require_prime(4)

    def test_polynomials_normalize_to_monic(self):
        ring = RationalPolynomialRing("x")
        assert ring.normalize(ring.parse("3*x^2 + 6")) == ring.parse("x^2 + 2")
        assert ring.gcd(ring.parse("x^2 - 1"), ring.parse("2*x - 2")) == ring.parse("x - 1")

    def test_polynomial_primes(self):
        ring = RationalPolynomialRing("x")
        assert ring.is_prime(ring.parse("x^2 + 1"))
        assert not ring.is_prime(ring.parse("x^2 - 1"))
        assert {ring.format(p) for p in ring.prime_factors(ring.parse("x^3 - x"))} == {"x", "x - 1", "x + 1"}

    def test_polynomial_parse_rejects_undeclared_variables(self):
        with pytest.raises(ParseError):
            RationalPolynomialRing("x").parse("x + y")

    def test_poly_divmod(self):
        ring = RationalPolynomialRing("x")
        q, r = poly_divmod(ring.parse("x^3 + 1"), ring.parse("x + 1"))
        assert q == ring.parse("x^2 - x + 1")
        assert r.is_zero
        with pytest.raises(InexactDivisionError):
            poly_divmod(ring.parse("x"), ring.zero)

    def test_ring_factory(self):
        assert RingFactory.create_ring("int") == ZZ_RING
        assert RingFactory.create_ring("rational") == QQ_FIELD
        assert isinstance(RingFactory.create_ring("poly", ["t"]), RationalPolynomialRing)
        assert isinstance(RingFactory.create_ring("poly", ["x", "y"]), MultivariatePolynomialRing)
        with pytest.raises(ParseError):
            RingFactory.create_ring("poly")
        with pytest.raises(ParseError):
            RingFactory.create_ring("gaussian")


class TestSmithNormalForm:
    def test_integer_matrix(self):
        M = Matrix.from_rows(ZZ_RING, [[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        snf = smith_normal_form(M)
        assert snf.diagonal == [2, 6, 12]
        assert snf.U @ M @ snf.V == snf.D

    def test_transforms_are_inverse(self):
        M = Matrix.from_rows(ZZ_RING, [[4, 6, 2], [2, 8, 0]])
        snf = smith_normal_form(M)
        assert snf.U @ snf.U_inv == Matrix.identity(ZZ_RING, 2)
        assert snf.V @ snf.V_inv == Matrix.identity(ZZ_RING, 3)

    def test_divisibility_chain(self):
        M = Matrix.from_rows(ZZ_RING, [[6, 0, 0], [0, 4, 0], [0, 0, 10]])
        factors = smith_normal_form(M).invariant_factors
        assert factors == [2, 2, 60]

    def test_empty_matrix(self):
        snf = smith_normal_form(Matrix.zeros(ZZ_RING, 3, 0))
        assert snf.rank == 0
        assert snf.diagonal == []

    def test_polynomial_matrix(self):
        ring = RationalPolynomialRing("x")
        x = ring.parse("x")
        M = Matrix.from_rows(ring, [[x, x], [ring.zero, x * x]])
        assert smith_normal_form(M).diagonal == [ring.parse("x"), ring.parse("x^2")]

    def test_hermite_solve(self):
        M = Matrix.from_rows(ZZ_RING, [[2, 0], [0, 3]])
        assert hermite_solve(M, (4, 9)) == (2, 3)
        assert hermite_solve(M, (1, 0)) is None

    def test_kernel_basis(self):
        M = Matrix.from_rows(ZZ_RING, [[1, 1, 0], [0, 1, 1]])
        kernel = kernel_basis(M)
        assert len(kernel) == 1
        assert M.apply(kernel[0]) == (0, 0)

    def test_rank_mod(self):
        M = Matrix.from_rows(ZZ_RING, [[2, 0], [0, 3]])
        assert rank_mod(M, 2) == 1
        assert rank_mod(M, 5) == 2

    def test_cokernel(self):
        M = Matrix.from_rows(ZZ_RING, [[2, 0], [0, 0], [0, 4]])
        assert cokernel(M) == PresentationModule(ZZ_RING, 1, (2, 4))


class TestModules:
    def test_canonical_form(self):
        module = PresentationModule.canonical(ZZ_RING, 0, [4, 2, 1, 0])
        assert module.free_rank == 1
        assert module.invariant_factors == (2, 4)
        assert module.format() == "Z ⊕ Z/2 ⊕ Z/4"

    def test_coprime_factors_merge(self):
        assert PresentationModule.canonical(ZZ_RING, 0, [2, 3]).invariant_factors == (6,)

    def test_zero_module(self):
        assert PresentationModule.zero(ZZ_RING).format() == "0"
        assert PresentationModule.canonical(ZZ_RING, 0, [1, -1]).is_zero

    def test_elementary_divisors(self):
        assert PresentationModule.canonical(ZZ_RING, 0, [12]).elementary_divisors() == [(2, 2), (3, 1)]

    def test_p_primary_exponents(self):
        module = PresentationModule.canonical(ZZ_RING, 0, [12, 8])
        assert p_primary_exponents(module, 2) == [2, 3]
        assert p_primary_exponents(module, 3) == [1]

    def test_tensor_and_tor(self):
        module = PresentationModule.canonical(ZZ_RING, 1, [4])
        assert tensor_quotient(module, 2) == PresentationModule(ZZ_RING, 0, (2, 2))
        assert tor_quotient(module, 2) == PresentationModule(ZZ_RING, 0, (2,))
        assert universal_coefficient_module(module, module, 2) == PresentationModule(ZZ_RING, 0, (2, 2, 2))

    def test_polynomial_module_format(self):
        ring = RationalPolynomialRing("x")
        module = PresentationModule.canonical(ring, 1, [ring.parse("x^2")])
        assert module.format() == "Q[x] ⊕ Q[x]/(x^2)"
        assert module.torsion_size == 2


class TestIdeals:
    def test_principal_ideal_collapses_to_gcd(self):
        ideal = PrincipalIdeal.from_generators(ZZ_RING, [4, 6])
        assert ideal.generator == 2
        assert 10 in ideal
        assert 3 not in ideal

    def test_principal_containment(self):
        assert PrincipalIdeal(ZZ_RING, 8).is_contained_in(PrincipalIdeal(ZZ_RING, 4))
        assert not PrincipalIdeal(ZZ_RING, 4).is_contained_in(PrincipalIdeal(ZZ_RING, 8))

    def test_monomial_membership(self):
        ring = MultivariatePolynomialRing(["x", "y", "z"])
        assert monomial_divides((1, 1, 0), (2, 1, 1))
        assert monomial_ideal_contains([(1, 1, 0)], ring.parse("x*y*z + 2*x^2*y"))
        assert not monomial_ideal_contains([(1, 1, 0)], ring.parse("x*y + z"))

    def test_monomial_ideal_from_polynomials(self):
        ring = MultivariatePolynomialRing(["x", "y"])
        ideal = make_ideal(ring, ["x*y", "x^2"])
        assert isinstance(ideal, MonomialIdeal)
        assert ideal.contains(ring.parse("3*x^2*y"))
        assert not ideal.contains(ring.parse("y^2"))
        with pytest.raises(ParseError):
            MonomialIdeal.from_polynomials(ring, ["x + y"])
