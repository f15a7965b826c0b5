"""
Filtration constructions: ideal chains, weight rank simplicial, graph pipeline, Stanley–Reisner.
"""

from .base_builder import BuildResult, FiltrationBuilder
from .builder_factory import FiltrationFactory
from .graph import WeightedGraph, edge_exponents, graph_to_filtration, graph_to_weighted_clique
from .ideal_chain import IdealChainFiltrationBuilder, ideal_chain_filtration
from .stanley_reisner import StanleyReisnerFiltrationBuilder, minimal_non_faces, stanley_reisner_filtration, stanley_reisner_ideal, stanley_reisner_sequence
from .wrs import WRSFiltrationBuilder, check_ideal_equivalence, wrs_filtration

__all__ = ['BuildResult', 'FiltrationBuilder', 'FiltrationFactory', 'WeightedGraph', 'edge_exponents', 'graph_to_filtration', 'graph_to_weighted_clique', 'IdealChainFiltrationBuilder',
           'ideal_chain_filtration', 'StanleyReisnerFiltrationBuilder', 'minimal_non_faces', 'stanley_reisner_filtration', 'stanley_reisner_ideal', 'stanley_reisner_sequence',
           'WRSFiltrationBuilder', 'check_ideal_equivalence', 'wrs_filtration']
