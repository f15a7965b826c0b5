"""
Weighted Mayer–Vietoris sequences.

For a cover ``K = K₀ ∪ K₁`` with ``A = K₀ ∩ K₁`` the short exact sequence of
chain complexes ``0 → C(A) --φ--> C(K₀) ⊕ C(K₁) --ψ--> C(K) → 0`` with
``φ(c) = (c, -c)`` and ``ψ(d, e) = d + e`` yields the long exact sequence

    … → H_p(A) → H_p(K₀) ⊕ H_p(K₁) → H_p(K) --∂*--> H_{p-1}(A) → …

The connecting map splits a cycle ``z`` of ``K`` as ``d₀ + (z - d₀)`` with ``d₀``
the terms of ``z`` supported in ``K₀``, applies the boundary of the middle complex
and pulls the result back along ``φ``.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Sequence

from src.algebra.matrix import Matrix, Vector, scalar_identity
from src.algebra.normal_forms import LatticeSolver, hermite_solve, smith_normal_form
from src.complexes.simplex import Simplex
from src.complexes.weighted_complex import WeightedComplex
from src.exceptions import CoverError, InvariantBreachError
from src.homology.chain import ChainComplex
from src.homology.coefficients import CoefficientSystem
from src.homology.exactness import ExactnessReport, check_sequence
from src.homology.groups import HomologyGroup, InducedMap, chain_homology_group, induced_map

logger = logging.getLogger(__name__)


@dataclass
class MVSequence:
    """Groups and induced maps of the Mayer–Vietoris sequence, indexed by degree."""
    coefficients: CoefficientSystem
    top_degree: int
    intersection: Dict[int, HomologyGroup] = field(default_factory=dict)
    middle: Dict[int, HomologyGroup] = field(default_factory=dict)
    total: Dict[int, HomologyGroup] = field(default_factory=dict)
    phi: Dict[int, InducedMap] = field(default_factory=dict)
    psi: Dict[int, InducedMap] = field(default_factory=dict)
    delta: Dict[int, InducedMap] = field(default_factory=dict)

    def terms(self) -> List[tuple]:
        """``(name, group)`` pairs from ``H_top(A)`` down to ``H_0(K)``."""
        terms = []
        for p in range(self.top_degree, -1, -1):
            terms += [(f"H{p}(A)", self.intersection[p]), (f"H{p}(K0)+H{p}(K1)", self.middle[p]), (f"H{p}(K)", self.total[p])]
        return terms

    def maps(self) -> List[Matrix]:
        """Matrices between consecutive terms of ``terms()``."""
        maps = []
        for p in range(self.top_degree, -1, -1):
            maps += [self.phi[p].matrix, self.psi[p].matrix]
            if p > 0:
                maps.append(self.delta[p].matrix)
        return maps


def _closure_problem(simplices: Iterable[Simplex], members: frozenset) -> bool:
    return any(f not in members for s in simplices for _, f in s.faces())


def _direct_sum_embedding(ring, chain: Sequence[Any], basis: Sequence[Simplex], middle_basis: Sequence[tuple], sign_second: int) -> Vector:
    """``c ↦ (c, ±c)`` on the tagged middle basis."""
    position = {s: i for i, s in enumerate(middle_basis)}
    result = [ring.zero] * len(middle_basis)
    for s, x in zip(basis, chain):
        if ring.is_zero(x):
            continue
        result[position[(0, s)]] = x
        result[position[(1, s)]] = x if sign_second > 0 else -x
    return tuple(result)


def _sum_map(ring, chain: Sequence[Any], middle_basis: Sequence[tuple], basis: Sequence[Simplex]) -> Vector:
    """``(d, e) ↦ d + e``."""
    position = {s: i for i, s in enumerate(basis)}
    result = [ring.zero] * len(basis)
    for (_, s), x in zip(middle_basis, chain):
        if not ring.is_zero(x):
            result[position[s]] = result[position[s]] + x
    return tuple(result)


def _phi_matrix(ring, basis_a: Sequence[Simplex], middle_basis: Sequence[tuple]) -> Matrix:
    columns = []
    for j in range(len(basis_a)):
        unit = tuple(ring.one if i == j else ring.zero for i in range(len(basis_a)))
        columns.append(_direct_sum_embedding(ring, unit, basis_a, middle_basis, -1))
    if not columns:
        return Matrix.zeros(ring, len(middle_basis), 0)
    return Matrix.from_columns(ring, columns, len(middle_basis))


def build_mv(K: WeightedComplex, k0_simplices: Iterable[Simplex], k1_simplices: Iterable[Simplex], coeff: CoefficientSystem) -> MVSequence:
    """Build the Mayer–Vietoris sequence of ``K = K₀ ∪ K₁``.

    Args:
        K: the weighted complex; both parts inherit its weights
        k0_simplices, k1_simplices: simplex sets of the two parts
        coeff: coefficient system

    Raises:
        CoverError: the parts do not cover ``K``, leave ``K`` or are not face-closed
    """
    coeff.check_weights(K.ring)
    ring = coeff.base
    part0, part1 = frozenset(k0_simplices), frozenset(k1_simplices)
    everything = K.simplex_set()
    if not part0 <= everything or not part1 <= everything:
        raise CoverError("Cover parts contain simplices that are not in the complex")
    if part0 | part1 != everything:
        missing = sorted(everything - (part0 | part1), key=lambda s: (s.dimension, s.vertices))
        raise CoverError(f"Parts do not cover the complex; {K.label(missing[0])} is missing", context={'missing': len(missing)})
    for name, part in (("K0", part0), ("K1", part1)):
        if _closure_problem(part, part):
            raise CoverError(f"Part {name} is not closed under faces")

    K0, K1 = K.restrict(part0), K.restrict(part1)
    A = K.restrict(part0 & part1)
    chains_a = ChainComplex.from_complex(A, ring)
    chains_0 = ChainComplex.from_complex(K0, ring)
    chains_1 = ChainComplex.from_complex(K1, ring)
    chains_mid = chains_0.direct_sum(chains_1)
    chains_k = ChainComplex.from_complex(K, ring)
    top = K.dimension
    seq = MVSequence(coeff, top)

    for p in range(0, top + 1):
        seq.intersection[p] = chain_homology_group(chains_a, p, coeff)
        seq.middle[p] = chain_homology_group(chains_mid, p, coeff)
        seq.total[p] = chain_homology_group(chains_k, p, coeff)

    for p in range(0, top + 1):
        h_a, h_mid, h_k = seq.intersection[p], seq.middle[p], seq.total[p]
        seq.phi[p] = induced_map(h_a, h_mid, lambda c, h_a=h_a, h_mid=h_mid: _direct_sum_embedding(ring, c, h_a.basis, h_mid.basis, -1))
        seq.psi[p] = induced_map(h_mid, h_k, lambda c, h_mid=h_mid, h_k=h_k: _sum_map(ring, c, h_mid.basis, h_k.basis))
        if p > 0:
            connecting = ConnectingMap(ring, coeff.modulus, K0, chains_mid, chains_a, h_k.basis, p)
            seq.delta[p] = induced_map(h_k, seq.intersection[p - 1], connecting)
    logger.info(f"Mayer-Vietoris sequence over {coeff.label}: |K0| = {len(K0)}, |K1| = {len(K1)}, |A| = {len(A)}")
    return seq


class ConnectingMap:
    """Chain-level recipe for ``∂*: H_p(K) → H_{p-1}(A)``."""

    def __init__(self, ring, modulus: Any, K0: WeightedComplex, chains_mid: ChainComplex, chains_a: ChainComplex, basis_k: Sequence[Simplex], p: int):
        self.ring = ring
        self.modulus = modulus
        self.k0 = K0.simplex_set()
        self.chains_mid = chains_mid
        self.basis_k = list(basis_k)
        self.p = p
        basis_a = chains_a.bases.get(p - 1, [])
        middle_low = chains_mid.bases.get(p - 1, [])
        self.pullback = _phi_matrix(ring, basis_a, middle_low)
        if not ring.is_zero(modulus):
            self.pullback = self.pullback.hstack(scalar_identity(ring, len(middle_low), modulus))
        self.width = len(basis_a)

    def __call__(self, z: Sequence[Any]) -> Vector:
        ring = self.ring
        middle_basis = self.chains_mid.bases.get(self.p, [])
        position = {s: i for i, s in enumerate(middle_basis)}
        lifted = [ring.zero] * len(middle_basis)
        for s, x in zip(self.basis_k, z):
            if ring.is_zero(x):
                continue
            side = 0 if s in self.k0 else 1
            lifted[position[(side, s)]] = x
        image = self.chains_mid.boundary(self.p).apply(lifted)
        solution = hermite_solve(self.pullback, image)
        if solution is None:
            raise InvariantBreachError(f"Boundary of a split cycle in degree {self.p} does not come from the intersection")
        return tuple(solution[:self.width])


def verify_exactness(seq: MVSequence) -> ExactnessReport:
    """Check image = kernel at every term of the sequence, bounded by zero on both ends."""
    terms = seq.terms()
    report = check_sequence(seq.coefficients.base, [name for name, _ in terms], [group.orders for _, group in terms], seq.maps(),
                            is_field=seq.coefficients.is_field)
    if report.is_exact:
        logger.info(f"Mayer-Vietoris sequence over {seq.coefficients.label} is exact at all {len(report.checks)} terms")
    else:
        logger.error(f"Mayer-Vietoris sequence over {seq.coefficients.label} fails at {[c.position for c in report.failures]}")
    return report


def _psi_matrix(ring, middle_basis: Sequence[tuple], basis: Sequence[Simplex]) -> Matrix:
    columns = []
    for j in range(len(middle_basis)):
        unit = tuple(ring.one if i == j else ring.zero for i in range(len(middle_basis)))
        columns.append(_sum_map(ring, unit, middle_basis, basis))
    if not columns:
        return Matrix.zeros(ring, len(basis), 0)
    return Matrix.from_columns(ring, columns, len(basis))


def _is_injective(phi: Matrix) -> bool:
    return phi.ncols == 0 or smith_normal_form(phi).rank == phi.ncols


def _is_surjective(psi: Matrix) -> bool:
    if psi.nrows == 0:
        return True
    if psi.ncols == 0:
        return False
    solver = LatticeSolver(psi)
    ring = psi.ring
    return all(solver.contains(tuple(ring.one if i == j else ring.zero for i in range(psi.nrows))) for j in range(psi.nrows))


def chain_level_check(K: WeightedComplex, k0_simplices: Iterable[Simplex], k1_simplices: Iterable[Simplex], coeff: CoefficientSystem) -> bool:
    """Check that ``0 → C(A) → C(K₀) ⊕ C(K₁) → C(K) → 0`` is a short exact sequence of chain complexes.

    In every degree ``φ`` is injective, ``ψ`` is surjective, ``ψ∘φ = 0`` and both
    maps commute with the weighted boundaries.
    """
    ring = coeff.base
    part0, part1 = frozenset(k0_simplices), frozenset(k1_simplices)
    chains_a = ChainComplex.from_complex(K.restrict(part0 & part1), ring)
    chains_mid = ChainComplex.from_complex(K.restrict(part0), ring).direct_sum(ChainComplex.from_complex(K.restrict(part1), ring))
    chains_k = ChainComplex.from_complex(K, ring)
    for p in range(0, K.dimension + 1):
        basis_a, basis_mid, basis_k = chains_a.bases.get(p, []), chains_mid.bases.get(p, []), chains_k.bases.get(p, [])
        phi = _phi_matrix(ring, basis_a, basis_mid)
        psi = _psi_matrix(ring, basis_mid, basis_k)
        if not _is_injective(phi):
            logger.error(f"Chain map phi is not injective in degree {p}")
            return False
        if not _is_surjective(psi):
            logger.error(f"Chain map psi is not surjective in degree {p}")
            return False
        if phi.ncols and not (psi @ phi).is_zero():
            logger.error(f"psi o phi is not zero in degree {p}")
            return False
        if p == 0:
            continue
        low_a, low_mid, low_k = chains_a.bases.get(p - 1, []), chains_mid.bases.get(p - 1, []), chains_k.bases.get(p - 1, [])
        for j in range(len(basis_a)):
            unit = tuple(ring.one if i == j else ring.zero for i in range(len(basis_a)))
            left = chains_mid.boundary(p).apply(phi.column(j))
            right = _direct_sum_embedding(ring, chains_a.boundary(p).apply(unit), low_a, low_mid, -1)
            if tuple(left) != tuple(right):
                logger.error(f"phi does not commute with the boundary in degree {p}")
                return False
        for j in range(len(basis_mid)):
            unit = tuple(ring.one if i == j else ring.zero for i in range(len(basis_mid)))
            left = chains_k.boundary(p).apply(psi.column(j))
            right = _sum_map(ring, chains_mid.boundary(p).apply(unit), low_mid, low_k)
            if tuple(left) != tuple(right):
                logger.error(f"psi does not commute with the boundary in degree {p}")
                return False
    return True
