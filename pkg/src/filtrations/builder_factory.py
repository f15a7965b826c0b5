"""
Factory class for creating filtration builders.

Maps the construction names accepted on the command line to builder classes.
"""

from typing import Dict, Type

from .base_builder import FiltrationBuilder
from .ideal_chain import IdealChainFiltrationBuilder
from .stanley_reisner import StanleyReisnerFiltrationBuilder
from .wrs import WRSFiltrationBuilder


class FiltrationFactory:
    """Factory class to create the builder for each filtration construction."""

    # Registry of builders by construction name
    _builders: Dict[str, Type[FiltrationBuilder]] = {}

    @classmethod
    def register_builder(cls, name: str, builder_class: Type[FiltrationBuilder]) -> None:
        """Register a builder class for a construction name."""
        cls._builders[name] = builder_class

    @classmethod
    def create_builder(cls, name: str) -> FiltrationBuilder:
        """Create the builder for the named construction.

        Raises:
            ValueError: If no builder is registered under the name
        """
        if name not in cls._builders:
            raise ValueError(f"Unknown filtration construction: {name}")
        return cls._builders[name]()

    @classmethod
    def get_supported_constructions(cls) -> list:
        """Get list of supported construction names."""
        return list(cls._builders.keys())


FiltrationFactory.register_builder('wrs', WRSFiltrationBuilder)
FiltrationFactory.register_builder('ideal-chain', IdealChainFiltrationBuilder)
FiltrationFactory.register_builder('stanley-reisner', StanleyReisnerFiltrationBuilder)
