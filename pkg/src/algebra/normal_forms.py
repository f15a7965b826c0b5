"""
Smith normal form and the lattice solvers built on it.

``smith_normal_form`` diagonalizes a matrix over any ``EuclideanRing`` with a
fixed pivoting rule (smallest Euclidean norm, ties broken row-major) and tracks
both transforms together with their inverses, so callers can move between the
standard basis and the SNF basis without inverting anything.
"""

import logging
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from src.algebra.matrix import Matrix, Vector
from src.algebra.rings import EuclideanRing
from src.exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SNFResult:
    """``U·M·V = D`` with ``U_inv``/``V_inv`` the inverse transforms."""

    D: Matrix
    U: Matrix
    V: Matrix
    U_inv: Matrix
    V_inv: Matrix
    rank: int

    @property
    def diagonal(self) -> List[Any]:
        return [self.D[i, i] for i in range(self.rank)]

    @property
    def invariant_factors(self) -> List[Any]:
        """Non-unit diagonal entries, in divisibility order."""
        ring = self.D.ring
        return [d for d in self.diagonal if not ring.is_unit(d)]


class _Reducer:
    """Working state for one SNF computation."""

    def __init__(self, M: Matrix):
        ring = M.ring
        self.ring = ring
        self.m, self.n = M.nrows, M.ncols
        self.A = M.to_lists()
        self.U = Matrix.identity(ring, self.m).to_lists()
        self.U_inv = Matrix.identity(ring, self.m).to_lists()
        self.V = Matrix.identity(ring, self.n).to_lists()
        self.V_inv = Matrix.identity(ring, self.n).to_lists()

    def add_row(self, target: int, source: int, c: Any) -> None:
        """row_target += c·row_source"""
        for rows in (self.A, self.U):
            rows[target] = [a + c * b for a, b in zip(rows[target], rows[source])]
        for r in self.U_inv:
            r[source] = r[source] - c * r[target]

    def add_column(self, target: int, source: int, c: Any) -> None:
        """col_target += c·col_source"""
        for rows in (self.A, self.V):
            for r in rows:
                r[target] = r[target] + c * r[source]
        self.V_inv[source] = [a - c * b for a, b in zip(self.V_inv[source], self.V_inv[target])]

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        for rows in (self.A, self.U):
            rows[i], rows[j] = rows[j], rows[i]
        for r in self.U_inv:
            r[i], r[j] = r[j], r[i]

    def swap_columns(self, i: int, j: int) -> None:
        if i == j:
            return
        for rows in (self.A, self.V):
            for r in rows:
                r[i], r[j] = r[j], r[i]
        self.V_inv[i], self.V_inv[j] = self.V_inv[j], self.V_inv[i]

    def scale_row(self, i: int, u: Any) -> None:
        u_inv = self.ring.unit_inverse(u)
        for rows in (self.A, self.U):
            rows[i] = [a * u for a in rows[i]]
        for r in self.U_inv:
            r[i] = r[i] * u_inv

    def find_pivot(self, t: int) -> Optional[Tuple[int, int]]:
        ring = self.ring
        best = None
        best_norm = None
        for i in range(t, self.m):
            row = self.A[i]
            for j in range(t, self.n):
                if ring.is_zero(row[j]):
                    continue
                norm = ring.norm(row[j])
                if best is None or norm < best_norm:
                    best, best_norm = (i, j), norm
        return best

    def place_pivot(self, t: int, position: Tuple[int, int]) -> None:
        self.swap_rows(t, position[0])
        self.swap_columns(t, position[1])

    def clear_cross(self, t: int) -> bool:
        """Reduce column t and row t by the pivot; return True when both are cleared."""
        ring = self.ring
        pivot = self.A[t][t]
        clear = True
        for i in range(t + 1, self.m):
            if ring.is_zero(self.A[i][t]):
                continue
            q, r = ring.divmod(self.A[i][t], pivot)
            if not ring.is_zero(q):
                self.add_row(i, t, -q)
            if not ring.is_zero(r):
                clear = False
        for j in range(t + 1, self.n):
            if ring.is_zero(self.A[t][j]):
                continue
            q, r = ring.divmod(self.A[t][j], pivot)
            if not ring.is_zero(q):
                self.add_column(j, t, -q)
            if not ring.is_zero(r):
                clear = False
        return clear

    def find_non_multiple(self, t: int) -> Optional[int]:
        ring = self.ring
        pivot = self.A[t][t]
        for i in range(t + 1, self.m):
            for j in range(t + 1, self.n):
                if not ring.divides(pivot, self.A[i][j]):
                    return i
        return None

    def run(self) -> SNFResult:
        ring = self.ring
        t = 0
        while t < min(self.m, self.n):
            position = self.find_pivot(t)
            if position is None:
                break
            self.place_pivot(t, position)
            while True:
                if not self.clear_cross(t):
                    self.place_pivot(t, self.find_pivot(t))
                    continue
                offending_row = self.find_non_multiple(t)
                if offending_row is None:
                    break
                self.add_row(t, offending_row, ring.one)
            self.scale_row(t, ring.unit_normalizer(self.A[t][t]))
            t += 1
        rank = t
        result = SNFResult(D=Matrix.from_lists(ring, self.A, self.m, self.n), U=Matrix.from_lists(ring, self.U, self.m, self.m),
                           V=Matrix.from_lists(ring, self.V, self.n, self.n), U_inv=Matrix.from_lists(ring, self.U_inv, self.m, self.m),
                           V_inv=Matrix.from_lists(ring, self.V_inv, self.n, self.n), rank=rank)
        logger.debug(f"SNF over {ring.symbol}: {self.m}x{self.n}, rank {rank}")
        return result


def smith_normal_form(M: Matrix) -> SNFResult:
    """Compute the Smith normal form of ``M``.

    Args:
        M: Matrix over a Euclidean ring; empty shapes are allowed

    Returns:
        SNFResult with ``U·M·V = D``, unit-normalized diagonal ``d_1 | d_2 | …``
    """
    return _Reducer(M).run()


class LatticeSolver:
    """Solves ``M·x = b`` repeatedly against the column lattice of one matrix."""

    def __init__(self, M: Matrix):
        self.matrix = M
        self.ring: EuclideanRing = M.ring
        self.snf = smith_normal_form(M)

    def solve(self, b: Sequence[Any]) -> Optional[Vector]:
        """Return ``x`` with ``M·x = b``, or None when ``b`` is outside the column lattice."""
        ring = self.ring
        if len(b) != self.matrix.nrows:
            raise DimensionMismatchError(f"Right-hand side of length {len(b)} for a matrix with {self.matrix.nrows} rows")
        c = self.snf.U.apply(b)
        rank = self.snf.rank
        if any(not ring.is_zero(c[i]) for i in range(rank, len(c))):
            return None
        y = []
        for i in range(rank):
            q, r = ring.divmod(c[i], self.snf.D[i, i])
            if not ring.is_zero(r):
                return None
            y.append(q)
        y.extend(ring.zero for _ in range(self.matrix.ncols - rank))
        return self.snf.V.apply(y)

    def contains(self, b: Sequence[Any]) -> bool:
        return self.solve(b) is not None


def hermite_solve(M: Matrix, b: Sequence[Any]) -> Optional[Vector]:
    """Return ``x`` with ``M·x = b`` exactly, or None when ``b`` is not in the column lattice of ``M``.

    Raises:
        DimensionMismatchError: if ``b`` does not have ``M.nrows`` entries
    """
    return LatticeSolver(M).solve(b)


def normalize_vector(ring: EuclideanRing, v: Sequence[Any]) -> Vector:
    """Scale ``v`` by a unit so that its first nonzero entry is unit-normalized."""
    for x in v:
        if not ring.is_zero(x):
            u = ring.unit_normalizer(x)
            return tuple(y * u for y in v)
    return tuple(v)


def kernel_basis(M: Matrix, snf: SNFResult = None) -> List[Vector]:
    """Free basis of ``ker M``: the last ``cols - rank`` columns of ``V``."""
    snf = snf or smith_normal_form(M)
    return [normalize_vector(M.ring, snf.V.column(j)) for j in range(snf.rank, M.ncols)]


def column_space_basis(M: Matrix, snf: SNFResult = None) -> List[Vector]:
    """Free basis ``d_i·U_inv[:, i]`` of the column lattice of ``M``."""
    snf = snf or smith_normal_form(M)
    return [tuple(x * snf.D[i, i] for x in snf.U_inv.column(i)) for i in range(snf.rank)]


def rank_mod(M: Matrix, p: Any, snf: SNFResult = None) -> int:
    """Rank of ``M`` reduced modulo the prime element ``p``."""
    snf = snf or smith_normal_form(M)
    ring = M.ring
    return sum(1 for d in snf.diagonal if not ring.divides(p, d))


def cokernel(M: Matrix, ambient_rank: int = None):
    """Present ``R^ambient_rank / colspan(M)``.

    Args:
        M: Matrix with ``ambient_rank`` rows
        ambient_rank: Rank of the ambient free module (defaults to ``M.nrows``)

    Returns:
        PresentationModule with free rank ``ambient_rank - rank(M)``
    """
    from src.algebra.modules import PresentationModule

    if ambient_rank is None:
        ambient_rank = M.nrows
    if ambient_rank != M.nrows:
        raise DimensionMismatchError(f"Matrix has {M.nrows} rows but the ambient rank is {ambient_rank}")
    snf = smith_normal_form(M)
    return PresentationModule.canonical(M.ring, ambient_rank - snf.rank, snf.invariant_factors)
