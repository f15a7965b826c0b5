import logging
from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple

from src.algebra.matrix import Matrix
from src.algebra.rings import EuclideanRing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PresentationModule:
    """A finitely generated module ``R^free_rank ⊕ R/(f_1) ⊕ … ⊕ R/(f_k)`` in canonical form.

    Invariant factors are nonzero non-units, unit-normalized, with ``f_1 | f_2 | …``.
    Build instances through ``canonical`` unless the factors are already canonical.
    """

    ring: EuclideanRing
    free_rank: int
    invariant_factors: Tuple[Any, ...] = ()

    @classmethod
    def canonical(cls, ring: EuclideanRing, free_rank: int, elements: Sequence[Any] = ()) -> "PresentationModule":
        """Canonicalize ``R^free_rank ⊕ ⊕ R/(e)`` for arbitrary elements ``e``.

        Zero elements contribute free summands and units contribute nothing.
        """
        from src.algebra.normal_forms import smith_normal_form

        free = free_rank
        nonzero = []
        for e in elements:
            if ring.is_zero(e):
                free += 1
            elif not ring.is_unit(e):
                nonzero.append(e)
        if not nonzero:
            return cls(ring, free, ())
        k = len(nonzero)
        diagonal = Matrix(ring, k, k, tuple(tuple(nonzero[i] if i == j else ring.zero for j in range(k)) for i in range(k)))
        snf = smith_normal_form(diagonal)
        return cls(ring, free, tuple(snf.invariant_factors))

    @classmethod
    def zero(cls, ring: EuclideanRing) -> "PresentationModule":
        return cls(ring, 0, ())

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def is_free(self) -> bool:
        return not self.invariant_factors

    @property
    def num_generators(self) -> int:
        """Minimal number of generators (free summands plus cyclic torsion summands)."""
        return self.free_rank + len(self.invariant_factors)

    @property
    def torsion_size(self) -> Any:
        return self.ring.torsion_size(self.invariant_factors)

    def direct_sum(self, other: "PresentationModule") -> "PresentationModule":
        return PresentationModule.canonical(self.ring, self.free_rank + other.free_rank, self.invariant_factors + other.invariant_factors)

    def elementary_divisors(self) -> List[Tuple[Any, int]]:
        """Prime-power decomposition of the torsion part as ``(prime, exponent)`` pairs."""
        divisors = []
        for f in self.invariant_factors:
            for p in self.ring.prime_factors(f):
                divisors.append((p, self.ring.valuation(f, p)))
        return divisors

    def format(self) -> str:
        symbol = self.ring.symbol
        parts = []
        if self.free_rank == 1:
            parts.append(symbol)
        elif self.free_rank > 1:
            parts.append(f"{symbol}^{self.free_rank}")
        for f in self.invariant_factors:
            text = self.ring.format(f)
            if isinstance(f, int):
                parts.append(f"{symbol}/{text}")
            else:
                parts.append(f"{symbol}/({text})")
        return " ⊕ ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.format()


def p_primary_exponents(module: PresentationModule, p: Any) -> List[int]:
    """Multiset of ``p``-adic valuations of the invariant factors, zeros omitted.

    Raises:
        NotPrimeError: if ``p`` is not prime (irreducible) in the module's ring
    """
    ring = module.ring
    p = ring.require_prime(p)
    exponents = [ring.valuation(f, p) for f in module.invariant_factors]
    return sorted(e for e in exponents if e > 0)


def tensor_quotient(module: PresentationModule, m: Any) -> PresentationModule:
    """``M ⊗ R/(m)``."""
    ring = module.ring
    factors = [m] * module.free_rank + [ring.gcd(f, m) for f in module.invariant_factors]
    return PresentationModule.canonical(ring, 0, factors)


def tor_quotient(module: PresentationModule, m: Any) -> PresentationModule:
    """``Tor(M, R/(m))``; free summands contribute nothing."""
    ring = module.ring
    return PresentationModule.canonical(ring, 0, [ring.gcd(f, m) for f in module.invariant_factors])


def universal_coefficient_module(h_n: PresentationModule, h_prev: PresentationModule, m: Any) -> PresentationModule:
    """``H_n ⊗ R/(m) ⊕ Tor(H_{n-1}, R/(m))``."""
    return tensor_quotient(h_n, m).direct_sum(tor_quotient(h_prev, m))


def count_exponents(exponents: Sequence[int], at_least: int = None, exactly: int = None) -> int:
    if exactly is not None:
        return sum(1 for e in exponents if e == exactly)
    return sum(1 for e in exponents if e >= at_least)
