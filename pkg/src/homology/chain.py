import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from src.algebra.matrix import Matrix, block_diagonal
from src.algebra.rings import EuclideanRing
from src.complexes.simplex import Simplex
from src.complexes.weighted_complex import WeightedComplex
from src.exceptions import InexactDivisionError, ZeroWeightError

logger = logging.getLogger(__name__)


def weighted_boundary_matrix(K: WeightedComplex, n: int, ring: Optional[EuclideanRing] = None) -> Matrix:
    """Matrix of ``∂_n: C_n → C_{n-1}`` with entry ``(-1)^i w(σ)/w(d_i σ)``.

    Args:
        K: weighted complex over ℤ or ℚ[x]
        n: degree; degrees outside ``0..dim K + 1`` give empty matrices
        ring: target ring for the entries (defaults to the weight ring)

    Raises:
        ZeroWeightError: a face of an n-simplex has weight zero
        InexactDivisionError: a face weight does not divide its coface weight
    """
    weight_ring = K.ring
    ring = ring or weight_ring
    columns_basis = K.simplices_of_dim(n) if n >= 0 else []
    rows_basis = K.simplices_of_dim(n - 1) if n >= 1 else []
    row_index = {s: i for i, s in enumerate(rows_basis)}
    entries = [[ring.zero] * len(columns_basis) for _ in rows_basis]
    for j, sigma in enumerate(columns_basis):
        w_sigma = K.weight(sigma)
        for i, tau in sigma.faces():
            w_tau = K.weight(tau)
            if weight_ring.is_zero(w_tau):
                raise ZeroWeightError(f"Face {K.label(tau)} of {K.label(sigma)} has weight zero", context={'degree': n})
            try:
                ratio = weight_ring.exact_div(w_sigma, w_tau)
            except InexactDivisionError:
                raise InexactDivisionError(f"w({K.label(tau)}) does not divide w({K.label(sigma)}); the complex is not a valid weighted complex")
            entry = ring.convert(ratio)
            entries[row_index[tau]][j] = entry if i % 2 == 0 else -entry
    return Matrix.from_lists(ring, entries, len(rows_basis), len(columns_basis))


@dataclass
class ChainComplex:
    """Free chain complex ``… → C_n → C_{n-1} → …`` with explicit bases."""
    ring: EuclideanRing
    bases: Dict[int, List[Any]]
    boundaries: Dict[int, Matrix] = field(default_factory=dict)

    @classmethod
    def from_complex(cls, K: WeightedComplex, ring: Optional[EuclideanRing] = None) -> "ChainComplex":
        ring = ring or K.ring
        top = K.dimension
        bases = {n: K.simplices_of_dim(n) for n in range(0, top + 1)}
        boundaries = {n: weighted_boundary_matrix(K, n, ring) for n in range(1, top + 1)}
        logger.debug(f"Chain complex of {K!r} over {ring.symbol}: ranks {[len(bases[n]) for n in range(top + 1)]}")
        return cls(ring, bases, boundaries)

    @property
    def top_degree(self) -> int:
        return max((n for n, b in self.bases.items() if b), default=-1)

    def rank(self, n: int) -> int:
        return len(self.bases.get(n, []))

    def boundary(self, n: int) -> Matrix:
        """``∂_n``, or a correctly shaped zero matrix where none is stored."""
        if n in self.boundaries:
            return self.boundaries[n]
        return Matrix.zeros(self.ring, self.rank(n - 1), self.rank(n))

    def direct_sum(self, other: "ChainComplex") -> "ChainComplex":
        """``C ⊕ C'`` with boundary ``(d, e) ↦ (∂d, ∂'e)``; basis entries are tagged 0 or 1."""
        degrees = set(self.bases) | set(other.bases)
        bases = {n: [(0, s) for s in self.bases.get(n, [])] + [(1, s) for s in other.bases.get(n, [])] for n in degrees}
        boundaries = {n: block_diagonal(self.ring, [self.boundary(n), other.boundary(n)]) for n in degrees if n >= 1}
        return ChainComplex(self.ring, bases, boundaries)


def embedding_matrix(ring: EuclideanRing, source: List[Simplex], target: List[Any]) -> Matrix:
    """Inclusion of chain bases: column j has a 1 at the position of ``source[j]`` in ``target``."""
    index = {s: i for i, s in enumerate(target)}
    entries = [[ring.zero] * len(source) for _ in target]
    for j, s in enumerate(source):
        entries[index[s]][j] = ring.one
    return Matrix.from_lists(ring, entries, len(target), len(source))
