import logging
from typing import List, Sequence, Tuple

import networkx as nx

from src.complexes.simplex import Simplex
from src.exceptions import ComplexValidationError

logger = logging.getLogger(__name__)


class CliqueComplexBuilder:
    """Builds clique complexes of simple graphs and counts how often it did so."""

    def __init__(self):
        self.build_count = 0

    def build(self, num_vertices: int, edges: Sequence[Tuple[int, int]], max_dim: int) -> List[Simplex]:
        """Every clique with at most ``max_dim + 1`` vertices, as simplices.

        Args:
            num_vertices: vertices are ``0 .. num_vertices - 1``
            edges: undirected edges between vertex indices
            max_dim: largest simplex dimension to keep

        Raises:
            ComplexValidationError: on self-loops or duplicate edges
        """
        graph = nx.Graph()
        graph.add_nodes_from(range(num_vertices))
        for u, v in edges:
            if u == v:
                raise ComplexValidationError(f"Self-loop at vertex {u}")
            if graph.has_edge(u, v):
                raise ComplexValidationError(f"Duplicate edge {u}-{v}")
            graph.add_edge(u, v)
        self.build_count += 1
        simplices = []
        for clique in nx.enumerate_all_cliques(graph):
            if len(clique) > max_dim + 1:
                break
            simplices.append(Simplex.of(clique))
        logger.debug(f"Clique complex with {len(simplices)} simplices up to dimension {max_dim}")
        return sorted(simplices, key=lambda s: (s.dimension, s.vertices))


def clique_complex(num_vertices: int, edges: Sequence[Tuple[int, int]], max_dim: int) -> List[Simplex]:
    return CliqueComplexBuilder().build(num_vertices, edges, max_dim)


