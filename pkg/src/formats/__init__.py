"""
Input files, argument validation and report output for the command line.
"""

from .complex_file import (complex_to_dict, filtration_to_dict, parse_complex, parse_filtration, read_complex, read_filtration, write_complex,
                           write_filtration)
from .report import format_table, report_json, write_report
from .text_files import parse_graph, parse_simplex_list, read_graph, read_simplex_list
from .validators import validate_degree, validate_max_dim, validate_page, validate_power, validate_prime, validate_step

__all__ = ['complex_to_dict', 'filtration_to_dict', 'parse_complex', 'parse_filtration', 'read_complex', 'read_filtration', 'write_complex', 'write_filtration',
           'format_table', 'report_json', 'write_report', 'parse_graph', 'parse_simplex_list', 'read_graph', 'read_simplex_list', 'validate_degree',
           'validate_max_dim', 'validate_page', 'validate_power', 'validate_prime', 'validate_step']
