from typing import Any

from src.algebra.rings import EuclideanRing
from src.complexes.filtered import FilteredComplex
from src.exceptions import NotPrimeError, SemanticError, StepIndexError


def validate_prime(p: Any, ring: EuclideanRing) -> Any:
    """Validate a prime (irreducible) element and return it normalized"""
    if isinstance(p, str):
        p = ring.parse(p)
    p = ring.convert(p)
    if ring.is_zero(p) or ring.is_unit(p) or not ring.is_prime(p):
        raise NotPrimeError(f"{ring.format(p)} is not prime in {ring.symbol}")
    return ring.normalize(p)


def validate_step(F: FilteredComplex, i: int, q: int = 0) -> None:
    """Validate persistence indices against the steps of a filtration"""
    if q < 0:
        raise StepIndexError(f"Lag q must be nonnegative, got {q}")
    if i < 0 or i + q >= F.num_steps:
        raise StepIndexError(f"Steps {i} and {i + q} must lie in 0..{F.num_steps - 1}")


def validate_degree(k: int) -> None:
    if k < 0:
        raise SemanticError(f"Homology degree must be nonnegative, got {k}")


def validate_page(r: int) -> None:
    if r < 1:
        raise SemanticError(f"Spectral sequence pages start at 1, got {r}")


def validate_max_dim(max_dim: int) -> None:
    if max_dim < 0:
        raise SemanticError(f"Maximum clique dimension must be nonnegative, got {max_dim}")


def validate_power(power: int) -> None:
    if power < 1:
        raise SemanticError(f"Coefficient power must be at least 1, got {power}")
