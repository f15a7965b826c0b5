"""
Bockstein homomorphisms and Bockstein spectral sequences of weighted complexes.

Pages are computed twice: once in closed form from the integral invariant factors
and once as the image of multiplication by ``p^{r-1}`` on homology with ``R/(p^r)``
coefficients. The two must agree; a disagreement raises InvariantBreachError.
The first differential is also realized at chain level as ``[c] ↦ [∂c / p]``.

Everything here is generic over the base ring, so the same code serves integer
weights with a rational prime ``p`` and ℚ[x] weights with an irreducible ``π``.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from src.algebra.modules import PresentationModule, count_exponents, p_primary_exponents
from src.algebra.rings import EuclideanRing, RationalPolynomialRing
from src.complexes.weighted_complex import WeightedComplex
from src.config import MAX_WORKERS
from src.exceptions import InexactDivisionError, InvariantBreachError, MissingPrimeError, SemanticError
from src.homology.chain import weighted_boundary_matrix
from src.homology.coefficients import CoefficientSystem, base_ring_for
from src.homology.exactness import ExactnessReport, check_sequence
from src.homology.groups import HomologyResult, InducedMap, homology, homology_group, induced_map

logger = logging.getLogger(__name__)


@dataclass
class BocksteinTable:
    """Page dimensions and differential ranks of one Bockstein spectral sequence.

    ``dimensions[r][n]`` is ``dim E_n^r`` and ``ranks[r][n]`` the rank of
    ``d^r: E_n^r → E_{n-1}^r``. Pages run from 1 to ``r_stab``, the first page equal
    to ``E^∞``.
    """
    ring: EuclideanRing
    prime: Any
    top_degree: int
    dimensions: Dict[int, Dict[int, int]] = field(default_factory=dict)
    ranks: Dict[int, Dict[int, int]] = field(default_factory=dict)
    infinity: Dict[int, int] = field(default_factory=dict)
    r_stab: int = 1

    @property
    def prime_label(self) -> str:
        return self.ring.format(self.prime)

    @property
    def pages(self) -> List[int]:
        return sorted(self.dimensions)

    def dimension(self, r: int, n: int) -> int:
        """``dim E_n^r``; pages past the last computed one equal ``E^∞``."""
        if r > max(self.dimensions):
            return self.infinity.get(n, 0)
        return self.dimensions[r].get(n, 0)

    def rank(self, r: int, n: int) -> int:
        if r > max(self.ranks):
            return 0
        return self.ranks[r].get(n, 0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'prime': self.prime_label,
            'ring': self.ring.symbol,
            'r_stab': self.r_stab,
            'pages': [{'page': r, 'dimensions': [self.dimension(r, n) for n in range(self.top_degree + 1)],
                       'differential_ranks': [self.rank(r, n) for n in range(self.top_degree + 1)]} for r in self.pages],
            'infinity': [self.infinity.get(n, 0) for n in range(self.top_degree + 1)],
        }


@dataclass
class RecoveredHomology:
    """Integral homology reassembled from Bockstein tables."""
    ring: EuclideanRing
    modules: Dict[int, PresentationModule] = field(default_factory=dict)

    def module(self, n: int) -> PresentationModule:
        return self.modules.get(n, PresentationModule.zero(self.ring))

    def matches(self, result: HomologyResult) -> bool:
        degrees = set(self.modules) | set(result.degrees)
        return all(self.module(n) == result.module(n) for n in degrees)

    def format(self) -> str:
        degrees = sorted(self.modules) or [0]
        return "; ".join(f"H{n} = {self.module(n).format()}" for n in degrees)


def _weighted_base(K: WeightedComplex) -> EuclideanRing:
    return base_ring_for(K.ring)


def _divide_chain(ring: EuclideanRing, chain: Sequence[Any], p: Any, degree: int) -> tuple:
    try:
        return tuple(ring.exact_div(x, p) for x in chain)
    except InexactDivisionError:
        raise InvariantBreachError(f"Boundary of a mod-{ring.format(p)} cycle in degree {degree} is not divisible by {ring.format(p)}")


def bockstein_beta_matrix(K: WeightedComplex, p: Any, n: int) -> InducedMap:
    """``β: H_n(K, w; R/(p)) → H_{n-1}(K, w; R/(p))``, ``[c] ↦ [∂c / p]``.

    Generators of the source are lifted chains with ``∂c ≡ 0 mod p``, so the
    division is exact.
    """
    ring = _weighted_base(K)
    p = ring.require_prime(ring.convert(p))
    coeff = CoefficientSystem.prime_field(p, ring)
    source = homology_group(K, n, coeff)
    target = homology_group(K, n - 1, coeff)
    boundary = weighted_boundary_matrix(K, n, ring)

    beta = induced_map(source, target, lambda c: _divide_chain(ring, boundary.apply(c), p, n))
    logger.debug(f"Bockstein β_{n} at p = {ring.format(p)} has rank {beta.rank}")
    return beta


def _closed_form(integral: HomologyResult, ring: EuclideanRing, p: Any, top: int, pages: int):
    exponents = {n: p_primary_exponents(integral.module(n), p) for n in range(-1, top + 2)}
    dimensions, ranks = {}, {}
    for r in range(1, pages + 1):
        dimensions[r] = {n: integral.module(n).free_rank + count_exponents(exponents[n], at_least=r) + count_exponents(exponents[n - 1], at_least=r)
                         for n in range(0, top + 1)}
        ranks[r] = {n: count_exponents(exponents[n - 1], exactly=r) for n in range(0, top + 1)}
    return dimensions, ranks


def image_dimension(module: PresentationModule, ring: EuclideanRing, scale: Any) -> int:
    """Number of nonzero cyclic summands of ``scale·M``."""
    nonzero = module.free_rank
    for f in module.invariant_factors:
        if not ring.is_unit(ring.exact_div(f, ring.gcd(f, scale))):
            nonzero += 1
    return nonzero


def _image_method(K: WeightedComplex, ring: EuclideanRing, p: Any, top: int, pages: int):
    dimensions = {}
    for r in range(1, pages + 1):
        coeff = CoefficientSystem.quotient(ring.power(p, r), ring)
        result = homology(K, coeff, cross_check=False)
        scale = ring.power(p, r - 1)
        dimensions[r] = {n: image_dimension(result.module(n), ring, scale) for n in range(0, top + 1)}
    ranks = {}
    for r in range(1, pages):
        out = {top + 1: 0}
        for n in range(top, -1, -1):
            out[n] = dimensions[r][n] - dimensions[r + 1][n] - out[n + 1]
        if out[0] != 0 or any(v < 0 for v in out.values()):
            raise InvariantBreachError(f"Page {r} dimensions at p = {ring.format(p)} are not consistent with a differential")
        ranks[r] = {n: out[n] for n in range(0, top + 1)}
    return dimensions, ranks


def bockstein_pages(K: WeightedComplex, p: Any, max_r: Optional[int] = None) -> BocksteinTable:
    """Bockstein spectral sequence of ``K`` at the prime ``p``.

    Args:
        K: valid weighted complex over ℤ or ℚ[x]
        p: prime integer, or irreducible polynomial for ℚ[x] weights
        max_r: last page to tabulate; extended when torsion of higher order is present

    Raises:
        NotPrimeError: ``p`` is not prime in the base ring
        InvariantBreachError: the closed form, the image method and the chain-level
            first differential disagree
    """
    ring = _weighted_base(K)
    p = ring.require_prime(ring.convert(p))
    top = K.dimension
    integral = homology(K, CoefficientSystem.integral(ring), cross_check=False)
    highest = max((e for n in integral.degrees for e in p_primary_exponents(integral.module(n), p)), default=0)
    pages = highest + 1
    if max_r is not None and max_r > pages:
        pages = max_r
    elif max_r is not None and max_r < pages:
        logger.warning(f"Extending the Bockstein table at p = {ring.format(p)} from {max_r} to {pages} pages to reach E^∞")

    table = BocksteinTable(ring, p, top, r_stab=highest + 1)
    table.infinity = {n: integral.module(n).free_rank for n in range(0, top + 1)}
    if top < 0:
        table.dimensions, table.ranks = {1: {}}, {1: {}}
        return table

    closed_dims, closed_ranks = _closed_form(integral, ring, p, top, pages)
    image_dims, image_ranks = _image_method(K, ring, p, top, pages)
    if closed_dims != image_dims:
        raise InvariantBreachError(f"Bockstein pages at p = {ring.format(p)} differ: closed form {closed_dims}, image method {image_dims}")
    if any(closed_ranks[r] != image_ranks[r] for r in image_ranks):
        raise InvariantBreachError(f"Bockstein differentials at p = {ring.format(p)} differ between the closed form and the image method")
    for n in range(1, top + 1):
        beta_rank = bockstein_beta_matrix(K, p, n).rank
        if beta_rank != closed_ranks[1][n]:
            raise InvariantBreachError(f"Chain-level β_{n} has rank {beta_rank}, expected {closed_ranks[1][n]}")

    table.dimensions, table.ranks = closed_dims, closed_ranks
    logger.info(f"Bockstein spectral sequence at p = {ring.format(p)}: {pages} pages, stable from page {table.r_stab}")
    return table


def generalized_bockstein(K: WeightedComplex, pi: Any, max_r: Optional[int] = None) -> BocksteinTable:
    """Bockstein spectral sequence of a ℚ[x]-weighted complex at an irreducible ``π``."""
    if not isinstance(K.ring, RationalPolynomialRing):
        raise SemanticError(f"The generalized Bockstein sequence needs ℚ[x] weights, not {K.ring.symbol}")
    if isinstance(pi, str):
        pi = K.ring.parse(pi)
    return bockstein_pages(K, pi, max_r)


def relevant_primes(K: WeightedComplex) -> List[Any]:
    """Primes dividing some invariant factor of the integral weighted homology."""
    ring = _weighted_base(K)
    integral = homology(K, CoefficientSystem.integral(ring), cross_check=False)
    primes = {}
    for n in integral.degrees:
        for f in integral.module(n).invariant_factors:
            for q in ring.prime_factors(f):
                primes[ring.format(q)] = q
    return [primes[key] for key in sorted(primes, key=lambda k: (len(k), k))]


def bockstein_tables(K: WeightedComplex, primes: Sequence[Any], max_r: Optional[int] = None, max_workers: int = MAX_WORKERS) -> List[BocksteinTable]:
    """One table per prime, computed on a thread pool and returned in the order given."""
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        return list(executor.map(lambda p: bockstein_pages(K, p, max_r), primes))


def recover_integral(tables: Sequence[BocksteinTable], degrees: Optional[Sequence[int]] = None, primes: Optional[Sequence[Any]] = None) -> RecoveredHomology:
    """Reassemble integral homology: free rank from ``E^∞`` and ``R/(p^r)`` summands in
    degree ``n - 1`` from the rank of ``d^r`` out of degree ``n``.

    Args:
        tables: one table per relevant prime, all for the same complex
        degrees: degrees to report (defaults to ``0..top``)
        primes: the relevant primes; when given every one of them needs a table

    Raises:
        MissingPrimeError: no tables, a relevant prime has no table, or the tables
            disagree on free ranks
    """
    if not tables:
        raise MissingPrimeError("Integral recovery needs at least one Bockstein table")
    ring = tables[0].ring
    covered = {ring.format(t.prime) for t in tables}
    for q in primes or ():
        if ring.format(ring.normalize(ring.convert(q))) not in covered:
            raise MissingPrimeError(f"No Bockstein table for the relevant prime {ring.format(q)}", context={'covered': sorted(covered)})
    free = tables[0].infinity
    for t in tables[1:]:
        if t.infinity != free:
            raise MissingPrimeError(f"Tables at {tables[0].prime_label} and {t.prime_label} disagree on free ranks")
    top = max(t.top_degree for t in tables)
    degrees = list(degrees) if degrees is not None else list(range(0, top + 1))
    torsion: Dict[int, List[Any]] = {n: [] for n in degrees}
    for t in tables:
        for r in t.pages:
            for n in range(1, t.top_degree + 1):
                if n - 1 in torsion:
                    torsion[n - 1] += [ring.power(t.prime, r)] * t.rank(r, n)
    recovered = RecoveredHomology(ring, {n: PresentationModule.canonical(ring, free.get(n, 0), torsion[n]) for n in degrees})
    logger.info(f"Recovered integral homology from {len(tables)} table(s): {recovered.format()}")
    return recovered


def long_exact_window(K: WeightedComplex, p: Any, n: int) -> ExactnessReport:
    """Exactness of ``H_{n+1}(R/p) → H_n → H_n → H_n(R/p) → H_{n-1}`` at its three interior terms.

    The maps are the connecting map ``[c] ↦ [∂c / p]``, multiplication by ``p`` and
    reduction mod ``p``, each induced by an explicit chain map.
    """
    ring = _weighted_base(K)
    p = ring.require_prime(ring.convert(p))
    integral, mod_p = CoefficientSystem.integral(ring), CoefficientSystem.prime_field(p, ring)
    h_up = homology_group(K, n + 1, mod_p)
    h_n = homology_group(K, n, integral)
    h_n_mod = homology_group(K, n, mod_p)
    h_down = homology_group(K, n - 1, integral)
    boundary_up = weighted_boundary_matrix(K, n + 1, ring)
    boundary_n = weighted_boundary_matrix(K, n, ring)

    connecting_up = induced_map(h_up, h_n, lambda c: _divide_chain(ring, boundary_up.apply(c), p, n + 1))
    times_p = induced_map(h_n, h_n, lambda c: tuple(p * x for x in c))
    reduction = induced_map(h_n, h_n_mod, lambda c: tuple(c))
    connecting_down = induced_map(h_n_mod, h_down, lambda c: _divide_chain(ring, boundary_n.apply(c), p, n))
    names = [f"H{n + 1}(mod p)", f"H{n}", f"H{n}", f"H{n}(mod p)", f"H{n - 1}"]
    orders = [h_up.orders, h_n.orders, h_n.orders, h_n_mod.orders, h_down.orders]
    maps = [connecting_up.matrix, times_p.matrix, reduction.matrix, connecting_down.matrix]
    return check_sequence(ring, names, orders, maps, closed_ends=False)
