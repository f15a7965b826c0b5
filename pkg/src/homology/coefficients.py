import logging
import re
from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional

from src.algebra.rings import QQ_FIELD, ZZ_RING, EuclideanRing, IntegerRing, RationalPolynomialRing, WeightRing
from src.exceptions import NotPrimeError, ParseError, SemanticError

logger = logging.getLogger(__name__)


class CoefficientKind(Enum):
    INTEGRAL = "integral"
    FIELD = "field"
    QUOTIENT = "quotient"


@dataclass(frozen=True)
class CoefficientSystem:
    """Coefficients ``R/(m)`` over a Euclidean base ring ``R``.

    ``modulus`` is zero for the base ring itself and for ℚ (whose base ring is the
    field). Prime fields 𝔽_p and residue fields ℚ[x]/(π) are fields with a prime modulus.
    """

    kind: CoefficientKind
    base: EuclideanRing
    modulus: Any

    @classmethod
    def integral(cls, ring: EuclideanRing = ZZ_RING) -> "CoefficientSystem":
        return cls(CoefficientKind.INTEGRAL, ring, ring.zero)

    @classmethod
    def rational(cls) -> "CoefficientSystem":
        return cls(CoefficientKind.FIELD, QQ_FIELD, QQ_FIELD.zero)

    @classmethod
    def prime_field(cls, p: Any, ring: EuclideanRing = ZZ_RING) -> "CoefficientSystem":
        """𝔽_p over ℤ, or the residue field ``R/(p)`` for an irreducible ``p``."""
        return cls(CoefficientKind.FIELD, ring, ring.require_prime(ring.convert(p)))

    @classmethod
    def quotient(cls, m: Any, ring: EuclideanRing = ZZ_RING) -> "CoefficientSystem":
        """``R/(m)`` for a nonzero non-unit ``m``; prime ``m`` yields the field."""
        m = ring.normalize(ring.convert(m))
        if ring.is_zero(m) or ring.is_unit(m):
            raise SemanticError(f"Modulus {ring.format(m)} must be a nonzero non-unit")
        if ring.is_prime(m):
            return cls(CoefficientKind.FIELD, ring, m)
        return cls(CoefficientKind.QUOTIENT, ring, m)

    @property
    def is_field(self) -> bool:
        return self.kind == CoefficientKind.FIELD

    @property
    def has_modulus(self) -> bool:
        return not self.base.is_zero(self.modulus)

    @property
    def label(self) -> str:
        if not self.has_modulus:
            return self.base.symbol
        text = self.base.format(self.modulus)
        if isinstance(self.base, IntegerRing):
            return f"F_{text}" if self.is_field else f"Z/{text}"
        return f"{self.base.symbol}/({text})"

    def check_weights(self, weight_ring: WeightRing) -> None:
        """Raise SemanticError when complexes weighted in ``weight_ring`` cannot use these coefficients."""
        if isinstance(weight_ring, IntegerRing) and (self.base == ZZ_RING or self.base == QQ_FIELD):
            return
        if isinstance(weight_ring, RationalPolynomialRing) and self.base == weight_ring:
            return
        raise SemanticError(f"Coefficients {self.label} do not apply to weights in {weight_ring.symbol}")


_POWER = re.compile(r'^(?P<base>.+?)(?:\^(?P<exp>\d+))?$')


def parse_coefficients(text: str, weight_ring: Optional[WeightRing] = None) -> CoefficientSystem:
    """Parse ``z|q|fp:<p>|zmod:<m>|poly|polymod:<π>^<r>``.

    Args:
        text: the option string
        weight_ring: weight ring of the complex; supplies the variable for ``poly`` forms

    Raises:
        ParseError: malformed option
        NotPrimeError: ``fp`` with a composite modulus
    """
    option = text.strip()
    head, _, arg = option.partition(':')
    head = head.lower()
    poly_ring = weight_ring if isinstance(weight_ring, RationalPolynomialRing) else RationalPolynomialRing("x")
    if head == 'z' and not arg:
        return CoefficientSystem.integral(ZZ_RING)
    if head == 'q' and not arg:
        return CoefficientSystem.rational()
    if head == 'poly' and not arg:
        return CoefficientSystem.integral(poly_ring)
    if head == 'fp' and arg:
        p = ZZ_RING.parse(arg)
        if p < 2 or not ZZ_RING.is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        return CoefficientSystem.prime_field(p)
    if head == 'zmod' and arg:
        m = ZZ_RING.parse(arg)
        if abs(m) < 2:
            raise ParseError(f"zmod needs a modulus of at least 2, got {m}")
        return CoefficientSystem.quotient(m)
    if head == 'polymod' and arg:
        match = _POWER.match(arg.strip())
        base_text, exp = match.group('base'), int(match.group('exp') or 1)
        if base_text.startswith('(') and base_text.endswith(')'):
            base_text = base_text[1:-1]
        pi = poly_ring.require_prime(poly_ring.parse(base_text))
        if exp < 1:
            raise ParseError(f"Exponent in {text!r} must be positive")
        return CoefficientSystem.quotient(poly_ring.power(pi, exp), poly_ring)
    raise ParseError(f"Unknown coefficient system {text!r}; expected z, q, fp:<p>, zmod:<m>, poly or polymod:<π>^<r>")


def base_ring_for(weight_ring: WeightRing) -> EuclideanRing:
    """The Euclidean ring homology is computed over for complexes weighted in ``weight_ring``."""
    if isinstance(weight_ring, IntegerRing):
        return ZZ_RING
    if isinstance(weight_ring, RationalPolynomialRing):
        return weight_ring
    raise SemanticError(f"Weights in {weight_ring.symbol} have no Euclidean coefficient ring; specialize them first")
