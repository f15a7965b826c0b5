"""
Weighted simplicial complexes.

A ``WeightedComplex`` owns a vertex label table and a weight for every simplex.
The simplex set is meant to be closed under faces and to satisfy the
divisibility condition ``σ₁ ⊆ σ₂ ⇒ w(σ₁) | w(σ₂)``; ``validate`` reports every
place where it is not. Instances are never mutated after construction; every
operation returns a new complex over the same vertex table.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from src import config
from src.algebra.rings import RationalPolynomialRing, WeightRing
from src.algebra.monomials import specialize_to_univariate
from src.complexes.ideals import Ideal, make_ideal
from src.complexes.simplex import Simplex
from src.exceptions import ComplexTooLargeError, ComplexValidationError, InvariantBreachError, ZeroWeightError

logger = logging.getLogger(__name__)


@dataclass
class ValidationReport:
    """Violations found by ``WeightedComplex.validate``."""
    closure_violations: List[Tuple[Simplex, Simplex]] = field(default_factory=list)
    divisibility_violations: List[Tuple[Simplex, Simplex]] = field(default_factory=list)
    zero_weight_warnings: List[Simplex] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.closure_violations and not self.divisibility_violations


class WeightedComplex:
    def __init__(self, ring: WeightRing, vertex_labels: Sequence[str], weights: Mapping[Simplex, Any]):
        self.ring = ring
        self.vertex_labels: Tuple[str, ...] = tuple(vertex_labels)
        cap = config.get_max_simplices()
        if len(weights) > cap:
            raise ComplexTooLargeError(f"Complex has {len(weights)} simplices, above the cap of {cap}", context={'cap': cap})
        for s in weights:
            if s.vertices[-1] >= len(self.vertex_labels):
                raise ComplexValidationError(f"Simplex {s.vertices} references an unknown vertex")
        self._weights: Dict[Simplex, Any] = {s: ring.convert(w) for s, w in weights.items()}
        self._ordered: List[Simplex] = sorted(self._weights, key=lambda s: (s.dimension, s.vertices))

    @classmethod
    def empty(cls, ring: WeightRing, vertex_labels: Sequence[str] = ()) -> "WeightedComplex":
        return cls(ring, vertex_labels, {})

    @property
    def simplices(self) -> List[Simplex]:
        return list(self._ordered)

    @property
    def dimension(self) -> int:
        return self._ordered[-1].dimension if self._ordered else -1

    @property
    def weights(self) -> Dict[Simplex, Any]:
        return dict(self._weights)

    def __len__(self) -> int:
        return len(self._weights)

    def __contains__(self, simplex: Simplex) -> bool:
        return simplex in self._weights

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeightedComplex) and self.ring == other.ring and self.vertex_labels == other.vertex_labels and self._weights == other._weights

    def __repr__(self) -> str:
        return f"WeightedComplex({self.ring.symbol}, {len(self)} simplices, dim {self.dimension})"

    def weight(self, simplex: Simplex) -> Any:
        return self._weights[simplex]

    def simplices_of_dim(self, n: int) -> List[Simplex]:
        """Chain basis in degree ``n``: simplices ordered lexicographically by vertex indices."""
        return [s for s in self._ordered if s.dimension == n]

    def simplex_set(self) -> frozenset:
        return frozenset(self._weights)

    def label(self, simplex: Simplex) -> str:
        return "[" + ",".join(self.vertex_labels[v] for v in simplex.vertices) + "]"

    def simplex_from_labels(self, labels: Iterable[str]) -> Simplex:
        index = {name: i for i, name in enumerate(self.vertex_labels)}
        try:
            return Simplex.of(index[name] for name in labels)
        except KeyError as e:
            raise ComplexValidationError(f"Unknown vertex label {e.args[0]!r}")

    def validate(self) -> ValidationReport:
        """List every face-closure violation, divisibility violation and zero weight."""
        report = ValidationReport()
        for s in self._ordered:
            w = self._weights[s]
            if self.ring.is_zero(w):
                report.zero_weight_warnings.append(s)
            for face in s.proper_faces():
                if face not in self._weights:
                    report.closure_violations.append((s, face))
                elif not self.ring.divides(self._weights[face], w):
                    report.divisibility_violations.append((face, s))
        logger.debug(f"Validated {self!r}: {len(report.closure_violations)} closure, "
                     f"{len(report.divisibility_violations)} divisibility violations")
        return report

    def require_valid(self) -> None:
        report = self.validate()
        if report.closure_violations:
            s, face = report.closure_violations[0]
            raise ComplexValidationError(f"Face {self.label(face)} of {self.label(s)} is missing", context={'violations': len(report.closure_violations)})
        if report.divisibility_violations:
            face, s = report.divisibility_violations[0]
            raise ComplexValidationError(f"w({self.label(face)}) = {self.ring.format(self.weight(face))} does not divide "
                                         f"w({self.label(s)}) = {self.ring.format(self.weight(s))}")

    def is_closed(self) -> bool:
        return all(f in self._weights for s in self._ordered if s.dimension > 0 for _, f in s.faces())

    def restrict(self, simplices: Iterable[Simplex]) -> "WeightedComplex":
        """Subcomplex on the given simplices with inherited weights."""
        return WeightedComplex(self.ring, self.vertex_labels, {s: self._weights[s] for s in simplices})

    def with_unit_weights(self) -> "WeightedComplex":
        return WeightedComplex(self.ring, self.vertex_labels, {s: self.ring.one for s in self._ordered})

    def with_ring(self, ring: WeightRing, weights: Mapping[Simplex, Any]) -> "WeightedComplex":
        return WeightedComplex(ring, self.vertex_labels, weights)

    def subcomplex_excluding_ideal(self, ideal: Any) -> "WeightedComplex":
        """``K \\ w⁻¹(I)``.

        Args:
            ideal: an ``Ideal`` or a list of generators of the ideal in the weight ring

        Returns:
            The face-closed subcomplex of simplices whose weight is not in the ideal
        """
        if not isinstance(ideal, Ideal):
            ideal = make_ideal(self.ring, ideal)
        kept = [s for s in self._ordered if not ideal.contains(self._weights[s])]
        result = self.restrict(kept)
        if not result.is_closed():
            raise InvariantBreachError(f"Removing {ideal.format()} left a complex that is not face-closed")
        logger.debug(f"Excluded ideal {ideal.format()}: kept {len(kept)} of {len(self)} simplices")
        return result

    def specialize_weights(self, ring: Optional[RationalPolynomialRing] = None) -> "WeightedComplex":
        """Map polynomial weights into ℚ[x] by sending every variable to x.

        Raises:
            ZeroWeightError: if a nonzero weight collapses to zero
        """
        ring = ring or RationalPolynomialRing("x")
        weights = {}
        for s in self._ordered:
            w = self._weights[s]
            image = specialize_to_univariate(w, ring)
            if image.is_zero and not self.ring.is_zero(w):
                raise ZeroWeightError(f"Weight {self.ring.format(w)} of {self.label(s)} vanishes after specialization")
            weights[s] = image
        return WeightedComplex(ring, self.vertex_labels, weights)


def close_faces(ring: WeightRing, weights: Mapping[Simplex, Any]) -> Dict[Simplex, Any]:
    """Fill in missing faces with weight 1."""
    closed = dict(weights)
    for s in list(weights):
        for face in s.proper_faces():
            if face not in closed:
                closed[face] = ring.one
    added = len(closed) - len(weights)
    if added:
        logger.info(f"Added {added} missing faces with weight 1")
    return closed
