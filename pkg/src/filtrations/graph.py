"""
Weighted graphs to weighted clique complexes.

Edges are ranked by weight (equal weights share a rank); an edge of rank ``k``
gets weight ``2^k``, vertices get weight 1 and a higher clique gets the product of
the weights of its edges. Only exponents are summed; the integer weight ``2^e`` is
formed once per simplex.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from src.algebra.rings import ZZ_RING
from src.complexes.clique import CliqueComplexBuilder
from src.complexes.filtered import FilteredComplex
from src.complexes.simplex import Simplex
from src.complexes.weighted_complex import WeightedComplex
from src.exceptions import ComplexValidationError
from src.filtrations.wrs import wrs_filtration

logger = logging.getLogger(__name__)

ASCENDING = "asc"
DESCENDING = "desc"


@dataclass
class WeightedGraph:
    """Simple undirected graph with positive rational edge weights."""
    labels: List[str]
    edges: List[Tuple[str, str, Fraction]] = field(default_factory=list)

    def __post_init__(self):
        index = self.index
        seen = set()
        for u, v, w in self.edges:
            if u not in index or v not in index:
                raise ComplexValidationError(f"Edge {u}-{v} uses an unknown vertex")
            if u == v:
                raise ComplexValidationError(f"Self-loop at vertex {u}")
            key = frozenset((u, v))
            if key in seen:
                raise ComplexValidationError(f"Duplicate edge {u}-{v}")
            seen.add(key)
            if w <= 0:
                raise ComplexValidationError(f"Edge {u}-{v} has non-positive weight {w}")

    @property
    def index(self) -> Dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}


def edge_exponents(graph: WeightedGraph, order: str = DESCENDING) -> Dict[Simplex, int]:
    """Rank of every edge; rank 1 is the largest weight for ``desc`` and the smallest for ``asc``."""
    if order not in (ASCENDING, DESCENDING):
        raise ComplexValidationError(f"Unknown rank order {order!r}; expected 'asc' or 'desc'")
    distinct = sorted({w for _, _, w in graph.edges}, reverse=(order == DESCENDING))
    rank = {w: r for r, w in enumerate(distinct, start=1)}
    index = graph.index
    return {Simplex.of((index[u], index[v])): rank[w] for u, v, w in graph.edges}


def graph_to_weighted_clique(graph: WeightedGraph, max_dim: int, order: str = DESCENDING,
                             builder: Optional[CliqueComplexBuilder] = None) -> WeightedComplex:
    """Weighted clique complex of a graph, built with a single clique enumeration.

    Args:
        graph: simple weighted graph
        max_dim: largest clique dimension
        order: ``desc`` ranks the heaviest edge first, ``asc`` the lightest
        builder: clique builder to use (its ``build_count`` records the construction)
    """
    builder = builder or CliqueComplexBuilder()
    exponents = edge_exponents(graph, order)
    index = graph.index
    edges = [(index[u], index[v]) for u, v, _ in graph.edges]
    weights = {}
    for s in builder.build(len(graph.labels), edges, max_dim):
        exponent = sum(exponents[Simplex(pair)] for pair in combinations(s.vertices, 2))
        weights[s] = 2 ** exponent
    logger.debug(f"Weighted clique complex with {len(weights)} simplices from {len(edges)} edges")
    return WeightedComplex(ZZ_RING, graph.labels, weights)


def graph_to_filtration(graph: WeightedGraph, max_dim: int, order: str = DESCENDING,
                        builder: Optional[CliqueComplexBuilder] = None) -> FilteredComplex:
    """Weighted clique complex followed by the weight rank simplicial filtration."""
    return wrs_filtration(graph_to_weighted_clique(graph, max_dim, order, builder))
