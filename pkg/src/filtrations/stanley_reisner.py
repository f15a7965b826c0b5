"""
Stanley–Reisner filtrations.

Starting from a complex ``Δ_1`` with weights in ``ℚ[x_1, …, x_n]`` (one variable
per vertex), iterate ``Δ_{i+1} = Δ_i \\ w⁻¹(I_{Δ_i})`` where ``I_Δ`` is generated by
the square-free monomials of the minimal non-faces of ``Δ``. The descending
sequence stabilizes; it is returned re-indexed ascending, smallest complex first.
"""

import logging
from typing import Any, List, Set, Tuple

from src.algebra.monomials import square_free_monomial
from src.algebra.rings import MultivariatePolynomialRing, RationalPolynomialRing
from src.complexes.filtered import FilteredComplex
from src.complexes.ideals import MonomialIdeal
from src.complexes.weighted_complex import WeightedComplex
from src.exceptions import SemanticError
from src.filtrations.base_builder import FiltrationBuilder

logger = logging.getLogger(__name__)


def _variable_positions(K: WeightedComplex) -> List[int]:
    """Variable index of every vertex label."""
    variables = list(getattr(K.ring, 'variables', ()))
    positions = []
    for label in K.vertex_labels:
        if label not in variables:
            raise SemanticError(f"Vertex {label!r} has no variable in {K.ring.symbol}")
        positions.append(variables.index(label))
    return positions


def minimal_non_faces(K: WeightedComplex) -> List[Tuple[int, ...]]:
    """Vertex sets not in ``K`` all of whose proper subsets are.

    Candidates of size ``k + 1`` extend a face of size ``k`` by a larger vertex; a
    candidate is kept when it is missing and all its facets are present.
    """
    faces: Set[Tuple[int, ...]] = {s.vertices for s in K.simplices}
    vertices = range(len(K.vertex_labels))
    found = [(v,) for v in vertices if (v,) not in faces]
    size = 1
    layer = sorted(f for f in faces if len(f) == size)
    while layer:
        for face in layer:
            for v in vertices:
                if v <= face[-1]:
                    continue
                candidate = face + (v,)
                if candidate in faces:
                    continue
                facets = (candidate[:i] + candidate[i + 1:] for i in range(len(candidate)))
                if all(f in faces for f in facets):
                    found.append(candidate)
        size += 1
        layer = sorted(f for f in faces if len(f) == size)
    return sorted(found, key=lambda f: (len(f), f))


def stanley_reisner_ideal(K: WeightedComplex) -> MonomialIdeal:
    """``I_K`` in the weight ring of ``K``."""
    positions = _variable_positions(K)
    nvars = len(K.ring.variables)
    monomials = [square_free_monomial([positions[v] for v in face], nvars) for face in minimal_non_faces(K)]
    return MonomialIdeal(_monomial_ring(K), monomials)


def _monomial_ring(K: WeightedComplex) -> MultivariatePolynomialRing:
    if isinstance(K.ring, MultivariatePolynomialRing):
        return K.ring
    if isinstance(K.ring, RationalPolynomialRing):
        return MultivariatePolynomialRing(K.ring.variables)
    raise SemanticError(f"Stanley-Reisner filtrations need polynomial weights, not {K.ring.symbol}")


def stanley_reisner_sequence(K: WeightedComplex) -> Tuple[List[WeightedComplex], List[MonomialIdeal]]:
    """The descending sequence ``Δ_1 ⊇ Δ_2 ⊇ …`` up to stabilization, with the ideal used at each step."""
    ring = _monomial_ring(K)
    current = K if K.ring == ring else K.with_ring(ring, {s: ring.convert(w) for s, w in K.weights.items()})
    sequence, ideals = [current], []
    while True:
        ideal = stanley_reisner_ideal(current)
        ideals.append(ideal)
        following = current.subcomplex_excluding_ideal(ideal)
        if len(following) == len(current):
            break
        sequence.append(following)
        current = following
    logger.debug(f"Stanley-Reisner sequence stabilized after {len(sequence)} complexes")
    return sequence, ideals


def stanley_reisner_filtration(K: WeightedComplex) -> FilteredComplex:
    """Ascending re-indexing of the stabilized Stanley–Reisner sequence; the last step is ``Δ_1``."""
    sequence, ideals = stanley_reisner_sequence(K)
    steps = list(reversed(sequence))
    step_ideals = list(reversed(ideals[:len(sequence)]))
    return FilteredComplex.from_steps(steps, step_ideals=step_ideals)


class StanleyReisnerFiltrationBuilder(FiltrationBuilder):
    @property
    def name(self) -> str:
        return "stanley-reisner"

    def build(self, K: WeightedComplex, **options: Any) -> FilteredComplex:
        return stanley_reisner_filtration(K)
