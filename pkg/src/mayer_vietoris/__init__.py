"""
Mayer–Vietoris long exact sequences for covers of weighted complexes.
"""

from .sequence import ConnectingMap, MVSequence, build_mv, chain_level_check, verify_exactness

__all__ = ['ConnectingMap', 'MVSequence', 'build_mv', 'chain_level_check', 'verify_exactness']
