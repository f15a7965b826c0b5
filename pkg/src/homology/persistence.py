import logging
from typing import List

from src.algebra.modules import PresentationModule
from src.complexes.filtered import FilteredComplex
from src.exceptions import StepIndexError
from src.homology.chain import weighted_boundary_matrix
from src.homology.coefficients import CoefficientSystem
from src.homology.groups import HomologyGroup, InducedMap, embed_chain, homology_group, induced_map, lifted_boundaries, lifted_cycles
from src.homology.lattice import Lattice, LatticeQuotient

logger = logging.getLogger(__name__)


def check_indices(F: FilteredComplex, i: int, q: int) -> None:
    if q < 0:
        raise StepIndexError(f"Persistence lag must be nonnegative, got {q}")
    if not 0 <= i < F.num_steps or i + q >= F.num_steps:
        raise StepIndexError(f"Steps {i} and {i + q} must lie in 0..{F.num_steps - 1}")


def persistent_homology(F: FilteredComplex, k: int, i: int, q: int, coeff: CoefficientSystem) -> HomologyGroup:
    """``H_k^{i,q} = Z_k^i / (B_k^{i+q} ∩ Z_k^i)`` by lattice lifting.

    Cycles of ``K^i`` are embedded in the chain basis of ``K^{i+q}``; with ``q = 0``
    this is the homology of ``K^i``.

    Raises:
        StepIndexError: if ``i`` or ``i + q`` is not a step of ``F``
    """
    check_indices(F, i, q)
    coeff.check_weights(F.complex.ring)
    ring = coeff.base
    early, late = F.step_complex(i), F.step_complex(i + q)
    early_basis = early.simplices_of_dim(k) if k >= 0 else []
    late_basis = late.simplices_of_dim(k) if k >= 0 else []
    cycles = [embed_chain(ring, c, early_basis, late_basis) for c in lifted_cycles(weighted_boundary_matrix(early, k, ring), coeff.modulus)]
    cycle_lattice = Lattice(ring, len(late_basis), cycles)
    boundary_lattice = lifted_boundaries(weighted_boundary_matrix(late, k + 1, ring), coeff.modulus)
    group = HomologyGroup(k, coeff, late_basis, LatticeQuotient(cycle_lattice, boundary_lattice.intersection(cycle_lattice)))
    logger.debug(f"H_{k}^{{{i},{q}}} over {coeff.label}: {group.format()}")
    return group


def inclusion_map(F: FilteredComplex, k: int, i: int, q: int, coeff: CoefficientSystem) -> InducedMap:
    """The map ``H_k(K^i) → H_k(K^{i+q})`` induced by inclusion."""
    check_indices(F, i, q)
    ring = coeff.base
    source = homology_group(F.step_complex(i), k, coeff)
    target = homology_group(F.step_complex(i + q), k, coeff)
    return induced_map(source, target, lambda c: embed_chain(ring, c, source.basis, target.basis))


def eta_image(F: FilteredComplex, k: int, i: int, q: int, coeff: CoefficientSystem) -> PresentationModule:
    """Image of the inclusion-induced map on homology, computed in the coordinates of ``H_k(K^{i+q})``."""
    return inclusion_map(F, k, i, q, coeff).image


def persistence_indices(F: FilteredComplex) -> List[tuple]:
    """Every valid ``(k, i, q)`` triple of ``F`` in lexicographic order."""
    top = F.complex.dimension
    return [(k, i, q) for k in range(0, top + 1) for i in range(F.num_steps) for q in range(F.num_steps - i)]
