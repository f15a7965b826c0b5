import logging
from dataclasses import dataclass
from typing import Any, Callable, List, Sequence, Tuple

from src.algebra.rings import EuclideanRing, WeightRing
from src.exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)

Vector = Tuple[Any, ...]


@dataclass(frozen=True)
class Matrix:
    """Dense matrix over a single ring; rows are tuples of ring elements."""

    ring: WeightRing
    nrows: int
    ncols: int
    rows: Tuple[Tuple[Any, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise DimensionMismatchError(f"Matrix rows do not match declared shape {self.nrows}x{self.ncols}")

    @classmethod
    def zeros(cls, ring: WeightRing, nrows: int, ncols: int) -> "Matrix":
        return cls(ring, nrows, ncols, tuple(tuple(ring.zero for _ in range(ncols)) for _ in range(nrows)))

    @classmethod
    def identity(cls, ring: WeightRing, n: int) -> "Matrix":
        return cls(ring, n, n, tuple(tuple(ring.one if i == j else ring.zero for j in range(n)) for i in range(n)))

    @classmethod
    def from_rows(cls, ring: WeightRing, rows: Sequence[Sequence[Any]], ncols: int = None) -> "Matrix":
        converted = tuple(tuple(ring.convert(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(converted[0]) if converted else 0
        return cls(ring, len(converted), ncols, converted)

    @classmethod
    def from_columns(cls, ring: WeightRing, columns: Sequence[Sequence[Any]], nrows: int) -> "Matrix":
        for col in columns:
            if len(col) != nrows:
                raise DimensionMismatchError(f"Column of length {len(col)} in a matrix with {nrows} rows")
        rows = tuple(tuple(ring.convert(col[i]) for col in columns) for i in range(nrows))
        return cls(ring, nrows, len(columns), rows)

    @classmethod
    def from_lists(cls, ring: WeightRing, rows: List[List[Any]], nrows: int, ncols: int) -> "Matrix":
        """Freeze a working list-of-lists whose entries are already ring elements."""
        return cls(ring, nrows, ncols, tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, index: Tuple[int, int]) -> Any:
        i, j = index
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def to_lists(self) -> List[List[Any]]:
        return [list(r) for r in self.rows]

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, self.ncols, self.nrows, tuple(self.column(j) for j in range(self.ncols)))

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(x) for r in self.rows for x in r)

    def map(self, f: Callable[[Any], Any], ring: WeightRing = None) -> "Matrix":
        target = ring or self.ring
        return Matrix(target, self.nrows, self.ncols, tuple(tuple(f(x) for x in r) for r in self.rows))

    def apply(self, vector: Sequence[Any]) -> Vector:
        """Return ``M·v``."""
        if len(vector) != self.ncols:
            raise DimensionMismatchError(f"Vector of length {len(vector)} applied to a {self.nrows}x{self.ncols} matrix")
        zero = self.ring.zero
        result = []
        for r in self.rows:
            acc = zero
            for a, b in zip(r, vector):
                if not self.ring.is_zero(a) and not self.ring.is_zero(b):
                    acc = acc + a * b
            result.append(acc)
        return tuple(result)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatchError(f"Cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        cols = other.columns()
        rows = tuple(tuple(self._dot(r, c) for c in cols) for r in self.rows)
        return Matrix(self.ring, self.nrows, other.ncols, rows)

    def _dot(self, a: Sequence[Any], b: Sequence[Any]) -> Any:
        acc = self.ring.zero
        for x, y in zip(a, b):
            if not self.ring.is_zero(x) and not self.ring.is_zero(y):
                acc = acc + x * y
        return acc

    def scale(self, c: Any) -> "Matrix":
        return self.map(lambda x: x * c)

    def __neg__(self) -> "Matrix":
        return self.map(lambda x: -x)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Cannot add {self.shape} and {other.shape}")
        rows = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        return Matrix(self.ring, self.nrows, self.ncols, rows)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise DimensionMismatchError(f"Cannot place {other.nrows} rows beside {self.nrows}")
        return Matrix(self.ring, self.nrows, self.ncols + other.ncols, tuple(a + b for a, b in zip(self.rows, other.rows)))

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise DimensionMismatchError(f"Cannot stack {other.ncols} columns under {self.ncols}")
        return Matrix(self.ring, self.nrows + other.nrows, self.ncols, self.rows + other.rows)

    def select_columns(self, indices: Sequence[int]) -> "Matrix":
        return Matrix(self.ring, self.nrows, len(indices), tuple(tuple(r[j] for j in indices) for r in self.rows))

    def select_rows(self, indices: Sequence[int]) -> "Matrix":
        return Matrix(self.ring, len(indices), self.ncols, tuple(self.rows[i] for i in indices))

    def format(self) -> str:
        fmt = self.ring.format
        return "\n".join("[" + ", ".join(fmt(x) for x in r) + "]" for r in self.rows)


def block_diagonal(ring: WeightRing, blocks: Sequence[Matrix]) -> Matrix:
    nrows = sum(b.nrows for b in blocks)
    ncols = sum(b.ncols for b in blocks)
    rows = [[ring.zero] * ncols for _ in range(nrows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.nrows):
            for j in range(b.ncols):
                rows[r0 + i][c0 + j] = b[i, j]
        r0 += b.nrows
        c0 += b.ncols
    return Matrix.from_lists(ring, rows, nrows, ncols)


def scalar_identity(ring: EuclideanRing, n: int, m: Any) -> Matrix:
    """``m·I_n``."""
    return Matrix(ring, n, n, tuple(tuple(m if i == j else ring.zero for j in range(n)) for i in range(n)))


def vector_is_zero(ring: WeightRing, v: Sequence[Any]) -> bool:
    return all(ring.is_zero(x) for x in v)


def add_vectors(a: Sequence[Any], b: Sequence[Any]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def scale_vector(v: Sequence[Any], c: Any) -> Vector:
    return tuple(x * c for x in v)
