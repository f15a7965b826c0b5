from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Tuple

from src.exceptions import ComplexValidationError


@dataclass(frozen=True, order=True)
class Simplex:
    """A simplex as a strictly increasing tuple of interned vertex indices.

    The face map ``d_i`` deletes the i-th vertex of the sorted tuple.
    """

    vertices: Tuple[int, ...]

    def __post_init__(self):
        if not self.vertices:
            raise ComplexValidationError("A simplex needs at least one vertex")
        if any(a >= b for a, b in zip(self.vertices, self.vertices[1:])):
            raise ComplexValidationError(f"Simplex vertices must be strictly increasing, got {self.vertices}")

    @classmethod
    def of(cls, vertices) -> "Simplex":
        """Build a simplex from vertex indices in any order."""
        ordered = tuple(sorted(vertices))
        if len(set(ordered)) != len(ordered):
            raise ComplexValidationError(f"Repeated vertex in simplex {ordered}")
        return cls(ordered)

    @property
    def dimension(self) -> int:
        return len(self.vertices) - 1

    def face(self, i: int) -> "Simplex":
        return Simplex(self.vertices[:i] + self.vertices[i + 1:])

    def faces(self) -> List[Tuple[int, "Simplex"]]:
        """``(i, d_i σ)`` for every codimension-one face; empty for vertices."""
        if self.dimension == 0:
            return []
        return [(i, self.face(i)) for i in range(len(self.vertices))]

    def proper_faces(self) -> Iterator["Simplex"]:
        """Every nonempty proper face."""
        for size in range(1, len(self.vertices)):
            for subset in combinations(self.vertices, size):
                yield Simplex(subset)

    def is_face_of(self, other: "Simplex") -> bool:
        return set(self.vertices) <= set(other.vertices)

    def __len__(self) -> int:
        return len(self.vertices)
