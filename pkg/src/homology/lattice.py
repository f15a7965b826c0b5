"""
Sublattices of ``R^N`` and their quotients.

Every homology computation reduces to presenting a quotient ``L_sup / L_sub`` of
two sublattices. ``LatticeQuotient`` keeps the SNF of the inclusion so that
arbitrary vectors of ``L_sup`` can be written in the coordinates of the cyclic
decomposition.
"""

import logging
from typing import Any, List, Optional, Sequence, Tuple

from src.algebra.matrix import Matrix, Vector
from src.algebra.modules import PresentationModule
from src.algebra.normal_forms import LatticeSolver, column_space_basis, kernel_basis, smith_normal_form
from src.algebra.rings import EuclideanRing
from src.exceptions import DimensionMismatchError, InvariantBreachError

logger = logging.getLogger(__name__)


class Lattice:
    """Submodule of ``R^ambient`` kept as a free basis."""

    def __init__(self, ring: EuclideanRing, ambient: int, generators: Sequence[Sequence[Any]] = ()):
        self.ring = ring
        self.ambient = ambient
        for g in generators:
            if len(g) != ambient:
                raise DimensionMismatchError(f"Generator of length {len(g)} in a lattice of rank-{ambient} space")
        spanning = Matrix.from_columns(ring, generators, ambient) if generators else Matrix.zeros(ring, ambient, 0)
        self.basis: List[Vector] = column_space_basis(spanning)
        self._solver: Optional[LatticeSolver] = None

    @classmethod
    def whole(cls, ring: EuclideanRing, ambient: int) -> "Lattice":
        return cls(ring, ambient, [tuple(ring.one if i == j else ring.zero for i in range(ambient)) for j in range(ambient)])

    @classmethod
    def scaled_whole(cls, ring: EuclideanRing, ambient: int, m: Any) -> "Lattice":
        """``m·R^ambient``; the zero lattice when ``m`` is zero."""
        if ring.is_zero(m):
            return cls(ring, ambient)
        return cls(ring, ambient, [tuple(m if i == j else ring.zero for i in range(ambient)) for j in range(ambient)])

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def basis_matrix(self) -> Matrix:
        if not self.basis:
            return Matrix.zeros(self.ring, self.ambient, 0)
        return Matrix.from_columns(self.ring, self.basis, self.ambient)

    @property
    def solver(self) -> LatticeSolver:
        if self._solver is None:
            self._solver = LatticeSolver(self.basis_matrix)
        return self._solver

    def coordinates(self, v: Sequence[Any]) -> Optional[Vector]:
        """Coordinates of ``v`` in the lattice basis, or None when ``v`` is not in the lattice."""
        return self.solver.solve(v)

    def contains(self, v: Sequence[Any]) -> bool:
        return self.solver.contains(v)

    def contains_lattice(self, other: "Lattice") -> bool:
        return all(self.contains(b) for b in other.basis)

    def equals(self, other: "Lattice") -> bool:
        return self.rank == other.rank and self.contains_lattice(other) and other.contains_lattice(self)

    def sum(self, other: "Lattice") -> "Lattice":
        return Lattice(self.ring, self.ambient, self.basis + other.basis)

    def intersection(self, other: "Lattice") -> "Lattice":
        """``L1 ∩ L2`` from the kernel of ``[B1 | -B2]``."""
        if not self.basis or not other.basis:
            return Lattice(self.ring, self.ambient)
        stacked = self.basis_matrix.hstack(-other.basis_matrix)
        k = self.rank
        b1 = self.basis_matrix
        generators = [b1.apply(v[:k]) for v in kernel_basis(stacked)]
        return Lattice(self.ring, self.ambient, generators)


class LatticeQuotient:
    """``sup / sub`` for lattices ``sub ⊆ sup`` with an explicit cyclic decomposition.

    Summands are ordered free first, then torsion in divisibility order, matching
    ``PresentationModule``.
    """

    def __init__(self, sup: Lattice, sub: Lattice):
        ring = sup.ring
        self.ring = ring
        self.sup = sup
        self.sub = sub
        columns = []
        for b in sub.basis:
            coords = sup.coordinates(b)
            if coords is None:
                raise InvariantBreachError("Quotient of lattices requires the sublattice to be contained in the lattice")
            columns.append(coords)
        relations = Matrix.from_columns(ring, columns, sup.rank) if columns else Matrix.zeros(ring, sup.rank, 0)
        self.snf = smith_normal_form(relations)
        rank = self.snf.rank
        self.summands: List[Tuple[int, Any]] = [(j, ring.zero) for j in range(rank, sup.rank)]
        self.summands += [(j, self.snf.D[j, j]) for j in range(rank) if not ring.is_unit(self.snf.D[j, j])]
        self.module = PresentationModule(ring, sup.rank - rank, tuple(d for _, d in self.summands if not ring.is_zero(d)))
        sup_basis = sup.basis_matrix
        self.generators: List[Vector] = [sup_basis.apply(self.snf.U_inv.column(j)) for j, _ in self.summands]

    @property
    def orders(self) -> List[Any]:
        """Annihilator of each summand (zero for free summands)."""
        return [d for _, d in self.summands]

    def coordinates(self, v: Sequence[Any]) -> Vector:
        """Coordinates of the class of ``v`` in the cyclic decomposition, torsion entries reduced."""
        ring = self.ring
        y = self.sup.coordinates(v)
        if y is None:
            raise InvariantBreachError("Vector does not lie in the lattice being divided")
        transformed = self.snf.U.apply(y)
        coords = []
        for j, d in self.summands:
            x = transformed[j]
            coords.append(x if ring.is_zero(d) else ring.rem(x, d))
        return tuple(coords)

    def is_trivial_class(self, v: Sequence[Any]) -> bool:
        return all(self.ring.is_zero(x) for x in self.coordinates(v))
