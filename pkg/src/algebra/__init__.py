"""
Exact algebra over Euclidean domains.

Rings, dense matrices, Smith normal form, lattice solving and canonical
module presentations consumed by every homology computation.
"""

from .matrix import Matrix
from .modules import PresentationModule, p_primary_exponents, tensor_quotient, tor_quotient, universal_coefficient_module
from .monomials import monomial_divides, monomial_ideal_contains, poly_divmod
from .normal_forms import LatticeSolver, SNFResult, cokernel, column_space_basis, hermite_solve, kernel_basis, rank_mod, smith_normal_form
from .rings import QQ_FIELD, ZZ_RING, EuclideanRing, IntegerRing, MultivariatePolynomialRing, RationalField, RationalPolynomialRing, RingFactory, WeightRing

__all__ = ['Matrix', 'PresentationModule', 'p_primary_exponents', 'tensor_quotient', 'tor_quotient', 'universal_coefficient_module', 'monomial_divides', 'monomial_ideal_contains',
           'poly_divmod', 'LatticeSolver', 'SNFResult', 'cokernel', 'column_space_basis', 'hermite_solve', 'kernel_basis', 'rank_mod', 'smith_normal_form', 'QQ_FIELD', 'ZZ_RING',
           'EuclideanRing', 'IntegerRing', 'MultivariatePolynomialRing', 'RationalField', 'RationalPolynomialRing', 'RingFactory', 'WeightRing']
