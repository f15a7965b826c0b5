import logging
from typing import Any, Dict, List, Mapping, Optional, Sequence

from src.complexes.simplex import Simplex
from src.complexes.weighted_complex import WeightedComplex
from src.exceptions import ComplexValidationError, StepIndexError

logger = logging.getLogger(__name__)


class FilteredComplex:
    """A final weighted complex with a birth step for every simplex.

    Step ``i`` is ``K^i = {σ : birth(σ) ≤ i}`` for ``0 ≤ i < num_steps``.
    ``thresholds`` and ``step_ideals`` carry construction metadata when a builder
    has it (weight thresholds, ideals per step).
    """

    def __init__(self, complex: WeightedComplex, births: Mapping[Simplex, int], num_steps: int,
                 thresholds: Optional[Sequence[Any]] = None, step_ideals: Optional[Sequence[Any]] = None):
        if num_steps < 1:
            raise StepIndexError(f"A filtration needs at least one step, got {num_steps}")
        if set(births) != complex.simplex_set():
            raise ComplexValidationError("Birth indices must be given for exactly the simplices of the complex")
        for s, b in births.items():
            if not 0 <= b < num_steps:
                raise StepIndexError(f"Birth {b} of {complex.label(s)} is outside 0..{num_steps - 1}")
            for face in s.proper_faces():
                if births[face] > b:
                    raise ComplexValidationError(f"Face {complex.label(face)} is born at {births[face]}, after its coface {complex.label(s)} at {b}")
        self.complex = complex
        self.births: Dict[Simplex, int] = dict(births)
        self.num_steps = num_steps
        self.thresholds = list(thresholds) if thresholds is not None else None
        self.step_ideals = list(step_ideals) if step_ideals is not None else None

    @classmethod
    def trivial(cls, complex: WeightedComplex, num_steps: int = 1) -> "FilteredComplex":
        return cls(complex, {s: 0 for s in complex.simplices}, num_steps)

    @classmethod
    def from_steps(cls, steps: Sequence[WeightedComplex], **metadata) -> "FilteredComplex":
        """Build from an increasing list of complexes sharing weights; the last one is the full complex."""
        final = steps[-1]
        births = {}
        for i, step in enumerate(steps):
            for s in step.simplices:
                births.setdefault(s, i)
        return cls(final, births, len(steps), **metadata)

    def birth(self, simplex: Simplex) -> int:
        return self.births[simplex]

    def step_complex(self, i: int) -> WeightedComplex:
        """The face-closed subcomplex of simplices born at or before step ``i``."""
        if not 0 <= i < self.num_steps:
            raise StepIndexError(f"Step {i} is outside 0..{self.num_steps - 1}")
        return self.complex.restrict(s for s in self.complex.simplices if self.births[s] <= i)

    def steps(self) -> List[WeightedComplex]:
        return [self.step_complex(i) for i in range(self.num_steps)]

    def specialize_weights(self) -> "FilteredComplex":
        """Same births with every vertex variable of a multivariate weight sent to x."""
        return FilteredComplex(self.complex.specialize_weights(), self.births, self.num_steps, self.thresholds, self.step_ideals)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FilteredComplex) and self.complex == other.complex and self.births == other.births and self.num_steps == other.num_steps

    def __repr__(self) -> str:
        return f"FilteredComplex({len(self.complex)} simplices, {self.num_steps} steps)"
