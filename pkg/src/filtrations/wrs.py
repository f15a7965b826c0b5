import logging
from typing import Any

from src.algebra.rings import IntegerRing
from src.complexes.filtered import FilteredComplex
from src.complexes.ideals import PrincipalIdeal
from src.complexes.weighted_complex import WeightedComplex
from src.exceptions import ChainOrderError, SemanticError
from src.filtrations.base_builder import FiltrationBuilder
from src.filtrations.ideal_chain import ideal_chain_filtration

logger = logging.getLogger(__name__)


def _positive_weights(K: WeightedComplex) -> list:
    if not isinstance(K.ring, IntegerRing):
        raise SemanticError(f"Weight rank filtrations need integer weights, not {K.ring.symbol}")
    weights = [K.weight(s) for s in K.simplices]
    bad = [s for s in K.simplices if K.weight(s) <= 0]
    if bad:
        raise SemanticError(f"Weight of {K.label(bad[0])} is {K.weight(bad[0])}; weight rank filtrations need positive weights")
    return weights


def wrs_filtration(K: WeightedComplex) -> FilteredComplex:
    """Weight rank simplicial filtration.

    With thresholds ``ε_1 < … < ε_T`` the distinct weights, step ``t - 1`` is
    ``{σ : w(σ) < ε_t}`` and the final step ``T`` is ``K``; step 0 is therefore empty.
    The threshold list is kept on the result.
    """
    thresholds = sorted(set(_positive_weights(K)))
    rank = {w: r for r, w in enumerate(thresholds, start=1)}
    births = {s: rank[K.weight(s)] for s in K.simplices}
    logger.debug(f"WRS thresholds {thresholds}")
    return FilteredComplex(K, births, len(thresholds) + 1, thresholds=thresholds)


def check_ideal_equivalence(K: WeightedComplex) -> bool:
    """Compare the WRS filtration with the ideal-chain filtration of ``ℤ ⊇ w_1ℤ ⊇ w_2ℤ ⊇ … ⊇ 0``.

    The ideal chain starts with the extra empty step ``L^0``, so its births are one
    higher than the WRS births when the two filtrations agree.

    Raises:
        ChainOrderError: the distinct weights are not totally ordered by division
    """
    thresholds = sorted(set(_positive_weights(K)))
    for a, b in zip(thresholds, thresholds[1:]):
        if b % a != 0:
            raise ChainOrderError(f"Weights {a} and {b} are not ordered by division")
    wrs = wrs_filtration(K)
    ideals = ideal_chain_filtration(K, [PrincipalIdeal(K.ring, w) for w in thresholds])
    agree = all(ideals.birth(s) - 1 == wrs.birth(s) for s in K.simplices)
    logger.debug(f"WRS and ideal-chain filtrations agree: {agree}")
    return agree


class WRSFiltrationBuilder(FiltrationBuilder):
    @property
    def name(self) -> str:
        return "wrs"

    def build(self, K: WeightedComplex, **options: Any) -> FilteredComplex:
        return wrs_filtration(K)
