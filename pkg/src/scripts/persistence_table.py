"""
Torsion-annotated persistence tables.

Every ``(k, i, q)`` query is independent, so ``persist --all`` fans the queries out
over a thread pool and reassembles the rows in ``(k, i, q)`` order.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List

from src.complexes.filtered import FilteredComplex
from src.homology.coefficients import CoefficientSystem
from src.homology.persistence import persistence_indices, persistent_homology

logger = logging.getLogger(__name__)


@dataclass
class PersistenceRow:
    """Data class to hold one persistence group."""
    k: int
    i: int
    q: int
    group: str
    free_rank: int
    torsion: List[str]


def single_persistence(F: FilteredComplex, coeff: CoefficientSystem, k: int, i: int, q: int) -> PersistenceRow:
    module = persistent_homology(F, k, i, q, coeff).module
    return PersistenceRow(k, i, q, module.format(), module.free_rank, [module.ring.format(f) for f in module.invariant_factors])


def persistence_table(F: FilteredComplex, coeff: CoefficientSystem, max_workers: int = 4) -> List[PersistenceRow]:
    """``H_k^{i,q}`` for every valid index triple of ``F``."""
    indices = persistence_indices(F)
    logger.info(f"Computing {len(indices)} persistence groups over {coeff.label} with {max_workers} workers")
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        rows = list(executor.map(lambda t: single_persistence(F, coeff, *t), indices))
    return rows
