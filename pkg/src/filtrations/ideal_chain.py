import logging
from typing import Any, List, Sequence

from src.algebra.monomials import square_free_monomial
from src.algebra.rings import EuclideanRing
from src.complexes.filtered import FilteredComplex
from src.complexes.ideals import Ideal, MonomialIdeal, PrincipalIdeal, make_ideal
from src.complexes.weighted_complex import WeightedComplex
from src.exceptions import ChainOrderError, ZeroWeightError
from src.filtrations.base_builder import FiltrationBuilder

logger = logging.getLogger(__name__)


def whole_ring_ideal(K: WeightedComplex) -> Ideal:
    if isinstance(K.ring, EuclideanRing):
        return PrincipalIdeal(K.ring, K.ring.one)
    return MonomialIdeal(K.ring, [square_free_monomial([], len(K.ring.variables))])


def zero_ideal(K: WeightedComplex) -> Ideal:
    if isinstance(K.ring, EuclideanRing):
        return PrincipalIdeal(K.ring, K.ring.zero)
    return MonomialIdeal(K.ring, [])


def ideal_chain_filtration(K: WeightedComplex, chain: Sequence[Any]) -> FilteredComplex:
    """Filtration ``L^t = K \\ w⁻¹(I_t)`` of a descending chain ``R = I_0 ⊇ I_1 ⊇ … ⊇ I_T ⊇ I_{T+1} = 0``.

    Args:
        K: weighted complex with nonzero weights
        chain: the ideals ``I_1 … I_T``, each an ``Ideal`` or a list of generators

    Returns:
        FilteredComplex with ``T + 2`` steps, ``L^0 = ∅`` and final step ``K``

    Raises:
        ZeroWeightError: a simplex has weight zero
        ChainOrderError: the chain is not descending
    """
    for s in K.simplices:
        if K.ring.is_zero(K.weight(s)):
            raise ZeroWeightError(f"Simplex {K.label(s)} has weight zero; ideal-chain filtrations need nonzero weights")
    ideals: List[Ideal] = [whole_ring_ideal(K)]
    ideals += [g if isinstance(g, Ideal) else make_ideal(K.ring, g) for g in chain]
    ideals.append(zero_ideal(K))
    for t in range(1, len(ideals)):
        if not ideals[t].is_contained_in(ideals[t - 1]):
            raise ChainOrderError(f"Ideal {ideals[t].format()} at position {t} is not contained in {ideals[t - 1].format()}")
    births = {}
    for s in K.simplices:
        w = K.weight(s)
        births[s] = next(t for t, ideal in enumerate(ideals) if not ideal.contains(w))
    logger.debug(f"Ideal chain {[i.format() for i in ideals]} gives {len(ideals)} steps")
    return FilteredComplex(K, births, len(ideals), step_ideals=ideals)


class IdealChainFiltrationBuilder(FiltrationBuilder):
    @property
    def name(self) -> str:
        return "ideal-chain"

    def build(self, K: WeightedComplex, chain: Sequence[Any] = (), **options: Any) -> FilteredComplex:
        return ideal_chain_filtration(K, chain)
