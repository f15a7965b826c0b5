import logging
from typing import Iterable, Sequence, Tuple

from sympy import Poly, QQ, Symbol
from sympy.polys.monomials import monomial_divides as _monomial_divides

from src.algebra.rings import RationalPolynomialRing
from src.exceptions import InexactDivisionError

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]


def poly_divmod(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    """Univariate division with remainder over ℚ: ``a = q·b + r`` with ``deg r < deg b``.

    Raises:
        InexactDivisionError: if ``b`` is the zero polynomial
    """
    if b.is_zero:
        raise InexactDivisionError("Division by the zero polynomial")
    return a.div(b)


def monomial_divides(m1: Monomial, m2: Monomial) -> bool:
    """True when the monomial with exponents ``m1`` divides the one with exponents ``m2``."""
    return bool(_monomial_divides(tuple(m1), tuple(m2)))


def square_free_monomial(indices: Iterable[int], nvars: int) -> Monomial:
    chosen = set(indices)
    return tuple(1 if i in chosen else 0 for i in range(nvars))


def monomial_to_poly(monomial: Monomial, gens: Sequence[Symbol]) -> Poly:
    return Poly.from_dict({tuple(monomial): 1}, *gens, domain=QQ)


def monomial_ideal_contains(generators: Sequence[Monomial], f: Poly) -> bool:
    """Decide ``f ∈ (generators)`` for a monomial ideal.

    A polynomial lies in a monomial ideal exactly when every one of its terms is
    divisible by some generator. The zero polynomial lies in every ideal.
    """
    if f.is_zero:
        return True
    if not generators:
        return False
    return all(any(monomial_divides(g, m) for g in generators) for m in f.monoms())


def specialize_to_univariate(f: Poly, ring: RationalPolynomialRing) -> Poly:
    """Send every variable of ``f`` to the generator of ``ring``."""
    return Poly(f.as_expr().subs({g: ring.gen for g in f.gens}), ring.gen, domain=QQ)
