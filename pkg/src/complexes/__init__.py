"""
Weighted simplicial complexes, their subcomplexes and filtrations.
"""

from .clique import CliqueComplexBuilder, clique_complex
from .filtered import FilteredComplex
from .ideals import Ideal, MonomialIdeal, PrincipalIdeal, make_ideal
from .simplex import Simplex
from .weighted_complex import ValidationReport, WeightedComplex, close_faces

__all__ = ['CliqueComplexBuilder', 'clique_complex', 'FilteredComplex', 'Ideal', 'MonomialIdeal', 'PrincipalIdeal', 'make_ideal', 'Simplex', 'ValidationReport', 'WeightedComplex',
           'close_faces']
