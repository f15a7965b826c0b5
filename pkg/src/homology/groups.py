"""
Weighted homology by lattice lifting.

For coefficients ``R/(m)`` the homology in degree ``n`` is presented as
``Z̃_n / B̃_n`` where ``Z̃_n = {c ∈ R^N : ∂c ∈ m·R^{N'}}`` and
``B̃_n = im ∂_{n+1} + m·R^N``. With ``m = 0`` this is ordinary homology over
``R``; the same code path serves ℤ, ℚ, 𝔽_p, ℤ/m and ℚ[x]/(π^r).
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

from src.algebra.matrix import Matrix, Vector, scalar_identity
from src.algebra.modules import PresentationModule, universal_coefficient_module
from src.algebra.normal_forms import kernel_basis
from src.algebra.rings import EuclideanRing
from src.complexes.weighted_complex import WeightedComplex
from src.exceptions import InvariantBreachError
from src.homology.chain import ChainComplex
from src.homology.coefficients import CoefficientSystem
from src.homology.lattice import Lattice, LatticeQuotient

logger = logging.getLogger(__name__)


def lifted_cycles(boundary: Matrix, modulus: Any) -> List[Vector]:
    """Basis of ``{c : ∂c ≡ 0 mod m}``."""
    ring = boundary.ring
    if ring.is_zero(modulus):
        return kernel_basis(boundary)
    augmented = boundary.hstack(scalar_identity(ring, boundary.nrows, modulus))
    return [v[:boundary.ncols] for v in kernel_basis(augmented)]


def lifted_boundaries(boundary_next: Matrix, modulus: Any) -> Lattice:
    """``im ∂_{n+1} + m·R^N``."""
    ring = boundary_next.ring
    image = Lattice(ring, boundary_next.nrows, boundary_next.columns())
    return image.sum(Lattice.scaled_whole(ring, boundary_next.nrows, modulus))


def embed_chain(ring: EuclideanRing, vector: Sequence[Any], source: Sequence[Any], target: Sequence[Any]) -> Vector:
    """Re-express a chain on basis ``source`` in the larger basis ``target``."""
    position = {s: i for i, s in enumerate(target)}
    result = [ring.zero] * len(target)
    for s, x in zip(source, vector):
        result[position[s]] = x
    return tuple(result)


@dataclass
class HomologyGroup:
    """One homology (or persistence) group with generators as chains on ``basis``."""
    degree: int
    coefficients: CoefficientSystem
    basis: List[Any]
    quotient: LatticeQuotient

    @property
    def module(self) -> PresentationModule:
        return self.quotient.module

    @property
    def generators(self) -> List[Vector]:
        return self.quotient.generators

    @property
    def dimension(self) -> int:
        """Dimension over the coefficient field (number of cyclic summands)."""
        return self.module.num_generators

    @property
    def orders(self) -> List[Any]:
        return self.quotient.orders

    def coordinates(self, chain: Sequence[Any]) -> Vector:
        return self.quotient.coordinates(chain)

    def format(self) -> str:
        return self.module.format()


def zero_group(n: int, coeff: CoefficientSystem) -> HomologyGroup:
    empty = Lattice(coeff.base, 0)
    return HomologyGroup(n, coeff, [], LatticeQuotient(empty, empty))


def chain_homology_group(chains: ChainComplex, n: int, coeff: CoefficientSystem) -> HomologyGroup:
    """Homology of an explicit chain complex with coefficients ``R/(m)``."""
    if n < 0 or n > chains.top_degree:
        return zero_group(n, coeff)
    boundary = chains.boundary(n)
    boundary_next = chains.boundary(n + 1)
    basis = list(chains.bases.get(n, []))
    ring = coeff.base
    cycles = Lattice(ring, len(basis), lifted_cycles(boundary, coeff.modulus))
    boundaries = lifted_boundaries(boundary_next, coeff.modulus)
    group = HomologyGroup(n, coeff, basis, LatticeQuotient(cycles, boundaries))
    logger.debug(f"H_{n} over {coeff.label}: cycles rank {cycles.rank}, boundaries rank {boundaries.rank}, group {group.format()}")
    return group


def homology_group(K: WeightedComplex, n: int, coeff: CoefficientSystem, chains: Optional[ChainComplex] = None) -> HomologyGroup:
    """``H_n(K, w; R/(m))``; degrees outside ``0..dim K`` give the zero group."""
    if n < 0 or n > K.dimension:
        return zero_group(n, coeff)
    coeff.check_weights(K.ring)
    return chain_homology_group(chains or ChainComplex.from_complex(K, coeff.base), n, coeff)


@dataclass
class HomologyResult:
    coefficients: CoefficientSystem
    groups: Dict[int, HomologyGroup] = field(default_factory=dict)

    def group(self, n: int) -> HomologyGroup:
        if n not in self.groups:
            return zero_group(n, self.coefficients)
        return self.groups[n]

    def module(self, n: int) -> PresentationModule:
        return self.group(n).module

    def dimension(self, n: int) -> int:
        return self.group(n).dimension

    @property
    def degrees(self) -> List[int]:
        return sorted(self.groups)

    def format(self) -> str:
        degrees = self.degrees or [0]
        return "; ".join(f"H{n} = {self.group(n).format()}" for n in degrees)


def homology(K: WeightedComplex, coeff: CoefficientSystem, cross_check: bool = True) -> HomologyResult:
    """Weighted homology in every degree ``0..dim K``.

    Args:
        K: valid weighted complex with nonzero face weights
        coeff: coefficient system compatible with the weight ring
        cross_check: for coefficients ``R/(m)`` compare each group with the
            universal-coefficient decomposition of the integral homology

    Raises:
        ZeroWeightError, InexactDivisionError: from the weighted boundary
        InvariantBreachError: the universal-coefficient cross-check failed
    """
    coeff.check_weights(K.ring)
    chains = ChainComplex.from_complex(K, coeff.base)
    result = HomologyResult(coeff, {n: homology_group(K, n, coeff, chains) for n in range(0, K.dimension + 1)})
    if cross_check and coeff.has_modulus:
        integral = homology(K, CoefficientSystem.integral(coeff.base), cross_check=False)
        for n in result.degrees:
            expected = universal_coefficient_module(integral.module(n), integral.module(n - 1), coeff.modulus)
            if result.module(n) != expected:
                raise InvariantBreachError(f"H_{n} over {coeff.label} is {result.module(n).format()} but the universal coefficient "
                                           f"decomposition gives {expected.format()}")
    logger.info(f"Homology of {K!r} over {coeff.label}: {result.format()}")
    return result


def unweighted_homology(K: WeightedComplex, coeff: CoefficientSystem) -> HomologyResult:
    """Homology with every weight replaced by 1."""
    return homology(K.with_unit_weights(), coeff)


def universal_coefficient_check(K: WeightedComplex, coeff: CoefficientSystem) -> bool:
    """True when every lattice-lifted group equals ``H_n ⊗ R/(m) ⊕ Tor(H_{n-1}, R/(m))``."""
    lifted = homology(K, coeff, cross_check=False)
    integral = homology(K, CoefficientSystem.integral(coeff.base), cross_check=False)
    return all(lifted.module(n) == universal_coefficient_module(integral.module(n), integral.module(n - 1), coeff.modulus)
               for n in range(0, K.dimension + 1))


@dataclass
class InducedMap:
    """A homomorphism between homology groups in the summand coordinates of each side."""
    source: HomologyGroup
    target: HomologyGroup
    matrix: Matrix
    image: PresentationModule
    is_injective: bool
    is_surjective: bool

    @property
    def rank(self) -> int:
        return self.image.num_generators

    @property
    def is_isomorphism(self) -> bool:
        return self.is_injective and self.is_surjective


def image_module(target: HomologyGroup, columns: Sequence[Vector]) -> LatticeQuotient:
    """Image of the given coordinate columns inside ``target``, as a quotient of lattices."""
    ring = target.coefficients.base
    size = len(target.orders)
    relations = [tuple(d if i == j else ring.zero for i in range(size)) for j, d in enumerate(target.orders) if not ring.is_zero(d)]
    spanned = Lattice(ring, size, list(columns) + relations)
    return LatticeQuotient(spanned, Lattice(ring, size, relations))


def induced_map(source: HomologyGroup, target: HomologyGroup, chain_map: Callable[[Vector], Vector]) -> InducedMap:
    """Matrix of the map on homology induced by a chain map.

    Injectivity compares the image with the source (finitely generated modules are
    Hopfian); surjectivity asks that the image lattice contain every summand generator.
    """
    ring = source.coefficients.base
    size = len(target.orders)
    columns = [target.coordinates(chain_map(g)) if size else () for g in source.generators]
    matrix = Matrix.from_columns(ring, columns, size) if columns else Matrix.zeros(ring, size, 0)
    quotient = image_module(target, columns)
    unit_vectors = [tuple(ring.one if i == j else ring.zero for i in range(size)) for j in range(size)]
    surjective = all(quotient.sup.contains(e) for e in unit_vectors)
    injective = quotient.module == source.module
    return InducedMap(source, target, matrix, quotient.module, injective, surjective)
