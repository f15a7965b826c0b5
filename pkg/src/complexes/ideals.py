"""
Ideals of weight rings, used to carve subcomplexes out of weighted complexes.
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, List, Sequence, Tuple

from src.algebra.monomials import Monomial, monomial_ideal_contains, monomial_to_poly
from src.algebra.rings import EuclideanRing, MultivariatePolynomialRing, WeightRing
from src.exceptions import ParseError

logger = logging.getLogger(__name__)


class Ideal(ABC):
    """An ideal of a weight ring that can answer membership queries."""

    ring: WeightRing

    @abstractmethod
    def contains(self, element: Any) -> bool:
        pass

    @abstractmethod
    def generators(self) -> List[Any]:
        pass

    @abstractmethod
    def is_contained_in(self, other: "Ideal") -> bool:
        pass

    def __contains__(self, element: Any) -> bool:
        return self.contains(element)

    def format(self) -> str:
        gens = self.generators()
        if not gens:
            return "(0)"
        return "(" + ", ".join(self.ring.format(g) for g in gens) + ")"


class PrincipalIdeal(Ideal):
    """``(g)`` in a Euclidean ring; generator lists collapse to their gcd."""

    def __init__(self, ring: EuclideanRing, generator: Any):
        self.ring = ring
        self.generator = ring.normalize(generator)

    @classmethod
    def from_generators(cls, ring: EuclideanRing, generators: Sequence[Any]) -> "PrincipalIdeal":
        g = ring.zero
        for x in generators:
            g = ring.gcd(g, ring.convert(x))
        return cls(ring, g)

    def contains(self, element: Any) -> bool:
        return self.ring.divides(self.generator, element)

    def generators(self) -> List[Any]:
        return [] if self.ring.is_zero(self.generator) else [self.generator]

    def is_contained_in(self, other: "Ideal") -> bool:
        return other.contains(self.generator)

    @property
    def is_whole_ring(self) -> bool:
        return self.ring.is_unit(self.generator)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrincipalIdeal) and self.ring == other.ring and self.generator == other.generator

    def __hash__(self) -> int:
        return hash((self.ring, self.generator))


class MonomialIdeal(Ideal):
    """An ideal of a polynomial ring generated by monomials (exponent vectors)."""

    def __init__(self, ring: MultivariatePolynomialRing, monomials: Sequence[Monomial]):
        self.ring = ring
        self.monomials: Tuple[Monomial, ...] = tuple(sorted(set(tuple(m) for m in monomials)))

    @classmethod
    def from_polynomials(cls, ring: MultivariatePolynomialRing, generators: Sequence[Any]) -> "MonomialIdeal":
        monomials = []
        for g in generators:
            poly = ring.convert(g)
            terms = poly.monoms()
            if poly.is_zero:
                continue
            if len(terms) != 1:
                raise ParseError(f"Generator {ring.format(poly)} of a monomial ideal must be a single term")
            monomials.append(terms[0])
        return cls(ring, monomials)

    def contains(self, element: Any) -> bool:
        return monomial_ideal_contains(self.monomials, self.ring.convert(element))

    def generators(self) -> List[Any]:
        return [monomial_to_poly(m, self.ring.gens) for m in self.monomials]

    def is_contained_in(self, other: "Ideal") -> bool:
        return all(other.contains(g) for g in self.generators())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MonomialIdeal) and self.ring == other.ring and self.monomials == other.monomials

    def __hash__(self) -> int:
        return hash((self.ring, self.monomials))


def make_ideal(ring: WeightRing, generators: Sequence[Any]) -> Ideal:
    """Build the ideal generated by ``generators`` in the shape the ring supports."""
    if isinstance(ring, EuclideanRing):
        return PrincipalIdeal.from_generators(ring, generators)
    if isinstance(ring, MultivariatePolynomialRing):
        return MonomialIdeal.from_polynomials(ring, generators)
    raise ParseError(f"Ideals over {ring.symbol} are not supported")
