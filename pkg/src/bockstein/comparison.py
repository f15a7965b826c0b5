"""
Comparison of persistence groups with mod ``p`` and mod ``p²`` coefficients.

``θ_k^{i,q}`` is the inclusion-induced map ``H_k(K^i; R/p) → H_k(K^{i+q}; R/p)``
and ``ε_k^{i,q}`` the same map with ``R/p²`` coefficients. When
``H_{k-1}^{i,q}(R/p) ≅ H_{k-1}^i(R/p)`` and ``H_k^{i,q}(R/p) ≅ H_k^{i+q}(R/p)``
the mod ``p²`` persistence group agrees with ``H_k^{i+q}(R/p²)``. Raising both
moduli to a power ``r`` gives the ``p^r`` / ``p^{2r}`` variant.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

from src.complexes.filtered import FilteredComplex
from src.homology.coefficients import CoefficientSystem, base_ring_for
from src.homology.groups import InducedMap
from src.homology.persistence import check_indices, inclusion_map, persistent_homology

logger = logging.getLogger(__name__)


def _coefficients(F: FilteredComplex, p: Any, exponent: int) -> CoefficientSystem:
    ring = base_ring_for(F.complex.ring)
    p = ring.require_prime(ring.convert(p))
    if exponent == 1:
        return CoefficientSystem.prime_field(p, ring)
    return CoefficientSystem.quotient(ring.power(p, exponent), ring)


def theta_matrix(F: FilteredComplex, k: int, i: int, q: int, p: Any, power: int = 1) -> InducedMap:
    """``θ_k^{i,q}`` over ``R/(p^power)``."""
    return inclusion_map(F, k, i, q, _coefficients(F, p, power))


def epsilon_map(F: FilteredComplex, k: int, i: int, q: int, p: Any, power: int = 1) -> InducedMap:
    """``ε_k^{i,q}`` over ``R/(p^{2·power})``."""
    return inclusion_map(F, k, i, q, _coefficients(F, p, 2 * power))


def _implies(premise: bool, conclusion: bool) -> bool:
    return not premise or conclusion


@dataclass
class InducedMapReport:
    k: int
    i: int
    q: int
    prime: Any
    power: int
    theta_k: InducedMap
    theta_prev: Optional[InducedMap]
    epsilon_k: InducedMap
    image_matches_persistence: bool
    hypothesis_prev: bool
    hypothesis_next: bool
    conclusion: bool
    persistence_square: str
    target_square: str

    @property
    def hypotheses_hold(self) -> bool:
        return self.hypothesis_prev and self.hypothesis_next

    @property
    def verdict(self) -> bool:
        return self.hypotheses_hold and self.conclusion

    @property
    def consistent(self) -> bool:
        """False only if the hypotheses hold and the conclusion does not."""
        return _implies(self.hypotheses_hold, self.conclusion)

    @property
    def theta_prev_injective(self) -> bool:
        return self.theta_prev is None or self.theta_prev.is_injective

    @property
    def four_lemma_injective(self) -> bool:
        """``θ_k`` onto, ``ε_k`` and ``θ_{k-1}`` injective ⇒ ``θ_k`` injective."""
        return _implies(self.theta_k.is_surjective and self.epsilon_k.is_injective and self.theta_prev_injective, self.theta_k.is_injective)

    @property
    def four_lemma_surjective(self) -> bool:
        """``θ_{k-1}`` injective and ``θ_k`` onto ⇒ ``ε_k`` onto."""
        return _implies(self.theta_prev_injective and self.theta_k.is_surjective, self.epsilon_k.is_surjective)

    def to_dict(self) -> Dict[str, Any]:
        def flags(m: Optional[InducedMap]):
            if m is None:
                return None
            return {'source': m.source.format(), 'target': m.target.format(), 'image': m.image.format(), 'injective': m.is_injective,
                    'surjective': m.is_surjective, 'matrix': m.matrix.format()}

        return {
            'indices': {'k': self.k, 'i': self.i, 'q': self.q},
            'prime': str(self.prime),
            'power': self.power,
            'theta_k': flags(self.theta_k),
            'theta_k_minus_1': flags(self.theta_prev),
            'epsilon_k': flags(self.epsilon_k),
            'image_matches_persistence': self.image_matches_persistence,
            'hypothesis_prev': self.hypothesis_prev,
            'hypothesis_next': self.hypothesis_next,
            'conclusion': self.conclusion,
            'persistence_group_squared': self.persistence_square,
            'target_group_squared': self.target_square,
            'verdict': self.verdict,
            'consistent': self.consistent,
            'four_lemma_injective': self.four_lemma_injective,
            'four_lemma_surjective': self.four_lemma_surjective,
        }


def ptop2_check(F: FilteredComplex, k: int, i: int, q: int, p: Any, power: int = 1) -> InducedMapReport:
    """Evaluate the mod ``p`` hypotheses and the mod ``p²`` conclusion at ``(k, i, q)``.

    In degree ``k - 1 < 0`` both sides of the first hypothesis are zero.

    Raises:
        StepIndexError: invalid ``i`` or ``i + q``
        NotPrimeError: ``p`` is not prime
    """
    check_indices(F, i, q)
    low, high = _coefficients(F, p, power), _coefficients(F, p, 2 * power)

    theta_k = inclusion_map(F, k, i, q, low)
    epsilon_k = inclusion_map(F, k, i, q, high)
    persistence_low = persistent_homology(F, k, i, q, low).module
    image_matches = theta_k.image == persistence_low

    theta_prev = None
    hypothesis_prev = True
    if k >= 1:
        theta_prev = inclusion_map(F, k - 1, i, q, low)
        hypothesis_prev = persistent_homology(F, k - 1, i, q, low).module == persistent_homology(F, k - 1, i, 0, low).module
    hypothesis_next = persistence_low == persistent_homology(F, k, i + q, 0, low).module

    persistence_high = persistent_homology(F, k, i, q, high).module
    target_high = persistent_homology(F, k, i + q, 0, high).module
    report = InducedMapReport(k, i, q, p, power, theta_k, theta_prev, epsilon_k, image_matches, hypothesis_prev, hypothesis_next,
                              persistence_high == target_high, persistence_high.format(), target_high.format())
    if not report.consistent:
        logger.error(f"Hypotheses hold at (k, i, q) = ({k}, {i}, {q}) but {persistence_high.format()} differs from {target_high.format()}")
    else:
        logger.info(f"Mod-p^2 comparison at (k, i, q) = ({k}, {i}, {q}), p = {p}: hypotheses {report.hypotheses_hold}, conclusion {report.conclusion}")
    return report
