"""
Bockstein spectral sequences, integral recovery and mod p / mod p² persistence comparison.
"""

from .comparison import InducedMapReport, epsilon_map, ptop2_check, theta_matrix
from .spectral import (BocksteinTable, RecoveredHomology, bockstein_beta_matrix, bockstein_pages, bockstein_tables, generalized_bockstein, image_dimension,
                       long_exact_window, recover_integral, relevant_primes)

__all__ = ['InducedMapReport', 'epsilon_map', 'ptop2_check', 'theta_matrix', 'BocksteinTable', 'RecoveredHomology', 'bockstein_beta_matrix', 'bockstein_pages',
           'bockstein_tables', 'generalized_bockstein', 'image_dimension', 'long_exact_window', 'recover_integral', 'relevant_primes']
