"""
Base class for filtration builders.

Each builder turns a weighted complex (plus builder-specific options) into a
``FilteredComplex``. Builders are registered with ``FiltrationFactory`` under the
name the command line uses.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any

from src.complexes.filtered import FilteredComplex
from src.complexes.weighted_complex import WeightedComplex

logger = logging.getLogger(__name__)


@dataclass
class BuildResult:
    """Data class to hold a built filtration and how it was obtained."""
    name: str
    filtration: FilteredComplex
    num_steps: int


class FiltrationBuilder(ABC):
    """Abstract base class for filtration constructions."""

    @property
    @abstractmethod
    def name(self) -> str:
        """Return the registry name of this construction."""
        pass

    @abstractmethod
    def build(self, K: WeightedComplex, **options: Any) -> FilteredComplex:
        pass

    def run(self, K: WeightedComplex, **options: Any) -> BuildResult:
        """Build and log the filtration."""
        logger.info(f"Building {self.name} filtration of {K!r}")
        filtration = self.build(K, **options)
        logger.info(f"{self.name} filtration has {filtration.num_steps} steps")
        return BuildResult(self.name, filtration, filtration.num_steps)
