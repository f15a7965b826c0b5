"""
Exactness checks for sequences of homology groups.

A term is described by the orders of its cyclic summands (zero for free
summands) and a map by its matrix in summand coordinates. Kernels and images are
compared as sublattices of ``R^s`` that contain the relations of the middle term,
so torsion is handled exactly.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, List, Optional, Sequence

from src.algebra.matrix import Matrix, Vector
from src.algebra.normal_forms import kernel_basis
from src.algebra.rings import EuclideanRing
from src.exceptions import DimensionMismatchError
from src.homology.lattice import Lattice, LatticeQuotient

logger = logging.getLogger(__name__)


@dataclass
class PositionCheck:
    position: str
    composite_zero: bool
    exact: bool
    rank_balanced: Optional[bool] = None

    @property
    def ok(self) -> bool:
        return self.composite_zero and self.exact and self.rank_balanced is not False


@dataclass
class ExactnessReport:
    checks: List[PositionCheck] = field(default_factory=list)

    @property
    def is_exact(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> List[PositionCheck]:
        return [c for c in self.checks if not c.ok]


def relation_vectors(ring: EuclideanRing, orders: Sequence[Any]) -> List[Vector]:
    size = len(orders)
    return [tuple(d if i == j else ring.zero for i in range(size)) for j, d in enumerate(orders) if not ring.is_zero(d)]


def _reduce(ring: EuclideanRing, vector: Sequence[Any], orders: Sequence[Any]) -> Vector:
    return tuple(x if ring.is_zero(d) else ring.rem(x, d) for x, d in zip(vector, orders))


def image_rank(ring: EuclideanRing, matrix: Matrix, orders: Sequence[Any]) -> int:
    """Number of cyclic summands of the image of ``matrix`` in ``⊕ R/(orders)``."""
    relations = relation_vectors(ring, orders)
    spanned = Lattice(ring, len(orders), matrix.columns() + relations)
    return LatticeQuotient(spanned, Lattice(ring, len(orders), relations)).module.num_generators


def check_position(ring: EuclideanRing, name: str, incoming: Matrix, middle_orders: Sequence[Any], outgoing: Matrix,
                   target_orders: Sequence[Any], is_field: bool = False) -> PositionCheck:
    """Check ``A --incoming--> M --outgoing--> B`` at ``M``.

    Args:
        incoming: ``len(middle_orders) × r`` matrix
        outgoing: ``len(target_orders) × len(middle_orders)`` matrix
        is_field: also require ``rank(incoming) + rank(outgoing) = dim M``
    """
    size = len(middle_orders)
    if incoming.nrows != size or outgoing.ncols != size or outgoing.nrows != len(target_orders):
        raise DimensionMismatchError(f"Maps around {name} do not match the summand counts")
    composite = outgoing @ incoming
    composite_zero = all(all(ring.is_zero(x) for x in _reduce(ring, composite.column(j), target_orders)) for j in range(composite.ncols))

    middle_relations = relation_vectors(ring, middle_orders)
    image = Lattice(ring, size, incoming.columns() + middle_relations)
    target_relations = relation_vectors(ring, target_orders)
    if target_relations:
        relation_block = Matrix.from_columns(ring, target_relations, len(target_orders))
        augmented = outgoing.hstack(relation_block)
    else:
        augmented = outgoing
    kernel = Lattice(ring, size, [v[:size] for v in kernel_basis(augmented)] + middle_relations)
    exact = image.equals(kernel)

    rank_balanced = None
    if is_field:
        rank_balanced = image_rank(ring, incoming, middle_orders) + image_rank(ring, outgoing, target_orders) == size
    check = PositionCheck(name, composite_zero, exact, rank_balanced)
    if not check.ok:
        logger.warning(f"Sequence is not exact at {name}: composite zero {composite_zero}, image = kernel {exact}, ranks {rank_balanced}")
    return check


def check_sequence(ring: EuclideanRing, names: Sequence[str], orders: Sequence[Sequence[Any]], maps: Sequence[Matrix],
                   is_field: bool = False, closed_ends: bool = True) -> ExactnessReport:
    """Check a finite sequence ``T_0 → T_1 → … → T_k``.

    With ``closed_ends`` the sequence is bounded by zero groups on both sides, so
    ``T_0`` and ``T_k`` are checked too; otherwise only interior terms are.
    An empty sequence is exact.
    """
    if not names and not maps:
        return ExactnessReport()
    if len(maps) != len(names) - 1:
        raise DimensionMismatchError("A sequence of k + 1 terms needs k maps")
    report = ExactnessReport()
    for idx, name in enumerate(names):
        if not closed_ends and idx in (0, len(names) - 1):
            continue
        size = len(orders[idx])
        incoming = maps[idx - 1] if idx > 0 else Matrix.zeros(ring, size, 0)
        if idx < len(maps):
            outgoing, target = maps[idx], orders[idx + 1]
        else:
            outgoing, target = Matrix.zeros(ring, 0, size), []
        report.checks.append(check_position(ring, name, incoming, orders[idx], outgoing, target, is_field))
    return report
