"""
Weighted homology and weighted persistent homology over ℤ, ℚ, 𝔽_p, ℤ/m and ℚ[x]/(π^r).
"""

from .chain import ChainComplex, weighted_boundary_matrix
from .coefficients import CoefficientKind, CoefficientSystem, base_ring_for, parse_coefficients
from .exactness import ExactnessReport, PositionCheck, check_position, check_sequence
from .groups import HomologyGroup, HomologyResult, InducedMap, chain_homology_group, homology, homology_group, induced_map, unweighted_homology, universal_coefficient_check
from .lattice import Lattice, LatticeQuotient
from .persistence import eta_image, inclusion_map, persistence_indices, persistent_homology

__all__ = ['ChainComplex', 'weighted_boundary_matrix', 'CoefficientKind', 'CoefficientSystem', 'base_ring_for', 'parse_coefficients', 'HomologyGroup', 'HomologyResult', 'InducedMap', 'chain_homology_group', 'ExactnessReport', 'PositionCheck', 'check_position', 'check_sequence', 'homology',
           'homology_group', 'induced_map', 'unweighted_homology', 'universal_coefficient_check', 'Lattice', 'LatticeQuotient', 'eta_image', 'inclusion_map', 'persistence_indices',
           'persistent_homology']
