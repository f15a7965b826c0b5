"""
Coefficient and weight rings.

Every ring used by the toolkit is an instance of ``WeightRing``; the ones that
admit a division algorithm additionally implement ``EuclideanRing`` and are the
rings the normal-form engine runs over.  Elements are plain library values:
``int`` for the integers, ``fractions.Fraction`` for the rationals and
``sympy.Poly`` over ``QQ`` for polynomial rings.
"""

import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple, Type

from sympy import Poly, QQ, Symbol, factorint, isprime, multiplicity

try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy import igcdex
from sympy.parsing.sympy_parser import parse_expr

from src.exceptions import InexactDivisionError, NotPrimeError, ParseError

logger = logging.getLogger(__name__)


class WeightRing(ABC):
    """A commutative ring weights can be drawn from."""

    tag: str = ""

    @property
    @abstractmethod
    def zero(self) -> Any:
        pass

    @property
    @abstractmethod
    def one(self) -> Any:
        pass

    @abstractmethod
    def convert(self, value: Any) -> Any:
        """Coerce a Python or library value into this ring."""
        pass

    @abstractmethod
    def is_zero(self, a: Any) -> bool:
        pass

    @abstractmethod
    def divides(self, a: Any, b: Any) -> bool:
        """Return True when ``a | b``. Zero divides only zero."""
        pass

    @abstractmethod
    def exact_div(self, a: Any, b: Any) -> Any:
        """Return ``a / b``, raising InexactDivisionError when no quotient exists."""
        pass

    @abstractmethod
    def parse(self, text: str) -> Any:
        pass

    @abstractmethod
    def format(self, a: Any) -> str:
        pass

    @property
    def symbol(self) -> str:
        return self.tag

    def __eq__(self, other: object) -> bool:
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._key()))

    def _key(self) -> Tuple:
        return ()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.symbol})"


class EuclideanRing(WeightRing):
    """A Euclidean domain with canonical unit normalization."""

    is_field: bool = False

    @abstractmethod
    def norm(self, a: Any) -> int:
        """Euclidean function of a nonzero element."""
        pass

    @abstractmethod
    def divmod(self, a: Any, b: Any) -> Tuple[Any, Any]:
        pass

    @abstractmethod
    def gcdex(self, a: Any, b: Any) -> Tuple[Any, Any, Any]:
        """Return ``(s, t, g)`` with ``s*a + t*b = g`` and ``g`` a gcd."""
        pass

    @abstractmethod
    def unit_normalizer(self, a: Any) -> Any:
        """Return a unit ``u`` such that ``a*u`` is the canonical associate of ``a``."""
        pass

    @abstractmethod
    def unit_inverse(self, u: Any) -> Any:
        pass

    @abstractmethod
    def is_unit(self, a: Any) -> bool:
        pass

    @abstractmethod
    def is_prime(self, a: Any) -> bool:
        pass

    @abstractmethod
    def prime_factors(self, a: Any) -> List[Any]:
        """Distinct normalized prime divisors of a nonzero element."""
        pass

    @abstractmethod
    def torsion_size(self, factors: Sequence[Any]) -> Any:
        """Size of ``R/(f_1) ⊕ … ⊕ R/(f_k)``: group order for integers, rational dimension for polynomials."""
        pass

    def rem(self, a: Any, b: Any) -> Any:
        return self.divmod(a, b)[1]

    def divides(self, a: Any, b: Any) -> bool:
        if self.is_zero(a):
            return self.is_zero(b)
        return self.is_zero(self.rem(b, a))

    def exact_div(self, a: Any, b: Any) -> Any:
        if self.is_zero(b):
            raise InexactDivisionError(f"Division of {self.format(a)} by zero in {self.symbol}")
        q, r = self.divmod(a, b)
        if not self.is_zero(r):
            raise InexactDivisionError(f"{self.format(b)} does not divide {self.format(a)} in {self.symbol}")
        return q

    def normalize(self, a: Any) -> Any:
        if self.is_zero(a):
            return a
        return a * self.unit_normalizer(a)

    def gcd(self, a: Any, b: Any) -> Any:
        return self.normalize(self.gcdex(a, b)[2])

    def lcm(self, a: Any, b: Any) -> Any:
        if self.is_zero(a) or self.is_zero(b):
            return self.zero
        return self.normalize(self.exact_div(a * b, self.gcd(a, b)))

    def power(self, a: Any, e: int) -> Any:
        result = self.one
        for _ in range(e):
            result = result * a
        return result

    def valuation(self, a: Any, p: Any) -> int:
        """Largest ``e`` with ``p^e | a`` for nonzero ``a``."""
        if self.is_zero(a):
            raise InexactDivisionError("Valuation of zero is unbounded")
        e = 0
        while True:
            q, r = self.divmod(a, p)
            if not self.is_zero(r):
                return e
            a = q
            e += 1

    def require_prime(self, p: Any) -> Any:
        """Return the normalized form of ``p`` after checking it is prime."""
        if self.is_zero(p) or self.is_unit(p) or not self.is_prime(p):
            raise NotPrimeError(f"{self.format(p)} is not a prime element of {self.symbol}")
        return self.normalize(p)


class IntegerRing(EuclideanRing):
    tag = "int"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def symbol(self) -> str:
        return "Z"

    def convert(self, value: Any) -> int:
        if isinstance(value, bool):
            raise ParseError(f"Boolean {value!r} is not an integer weight")
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        if isinstance(value, Poly) and value.is_ground and value.LC().is_integer:
            return int(value.LC())
        if isinstance(value, str):
            return self.parse(value)
        raise ParseError(f"Cannot interpret {value!r} as an integer")

    def is_zero(self, a: int) -> bool:
        return a == 0

    def norm(self, a: int) -> int:
        return abs(a)

    def divmod(self, a: int, b: int) -> Tuple[int, int]:
        return divmod(a, b)

    def gcdex(self, a: int, b: int) -> Tuple[int, int, int]:
        s, t, g = igcdex(a, b)
        return int(s), int(t), int(g)

    def unit_normalizer(self, a: int) -> int:
        return -1 if a < 0 else 1

    def unit_inverse(self, u: int) -> int:
        return u

    def is_unit(self, a: int) -> bool:
        return a in (1, -1)

    def is_prime(self, a: int) -> bool:
        return isprime(abs(a))

    def prime_factors(self, a: int) -> List[int]:
        return sorted(int(p) for p in factorint(abs(a)).keys())

    def valuation(self, a: int, p: int) -> int:
        if a == 0:
            raise InexactDivisionError("Valuation of zero is unbounded")
        return int(multiplicity(abs(p), abs(a)))

    def torsion_size(self, factors: Sequence[int]) -> int:
        size = 1
        for f in factors:
            size *= abs(f)
        return size

    def parse(self, text: str) -> int:
        try:
            return int(str(text).strip())
        except ValueError:
            raise ParseError(f"Invalid integer {text!r}")

    def format(self, a: int) -> str:
        return str(a)


class RationalField(EuclideanRing):
    """The field ℚ; every nonzero element is a unit."""

    tag = "rational"
    is_field = True

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    @property
    def symbol(self) -> str:
        return "Q"

    def convert(self, value: Any) -> Fraction:
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise ParseError(f"Cannot interpret {value!r} as a rational number")

    def is_zero(self, a: Fraction) -> bool:
        return a == 0

    def norm(self, a: Fraction) -> int:
        return 0

    def divmod(self, a: Fraction, b: Fraction) -> Tuple[Fraction, Fraction]:
        return Fraction(a) / b, Fraction(0)

    def gcdex(self, a: Fraction, b: Fraction) -> Tuple[Fraction, Fraction, Fraction]:
        if a != 0:
            return 1 / Fraction(a), Fraction(0), Fraction(1)
        if b != 0:
            return Fraction(0), 1 / Fraction(b), Fraction(1)
        return Fraction(0), Fraction(0), Fraction(0)

    def unit_normalizer(self, a: Fraction) -> Fraction:
        return 1 / Fraction(a)

    def unit_inverse(self, u: Fraction) -> Fraction:
        return 1 / Fraction(u)

    def is_unit(self, a: Fraction) -> bool:
        return a != 0

    def is_prime(self, a: Fraction) -> bool:
        return False

    def prime_factors(self, a: Fraction) -> List[Fraction]:
        return []

    def torsion_size(self, factors: Sequence[Fraction]) -> int:
        return 1

    def parse(self, text: str) -> Fraction:
        try:
            return Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"Invalid rational number {text!r}")

    def format(self, a: Fraction) -> str:
        return str(a)


def _format_expr(expr: Any) -> str:
    return str(expr).replace('**', '^')


def _parse_poly(text: str, symbols: Sequence[Symbol]) -> Poly:
    local_dict = {str(s): s for s in symbols}
    try:
        expr = parse_expr(str(text).replace('^', '**'), local_dict=local_dict)
    except Exception as e:
        raise ParseError(f"Invalid polynomial {text!r}: {e}")
    extra = set(getattr(expr, 'free_symbols', set())) - set(symbols)
    if extra:
        names = ", ".join(sorted(str(s) for s in extra))
        raise ParseError(f"Polynomial {text!r} uses undeclared variables: {names}")
    try:
        return Poly(expr, *symbols, domain=QQ)
    except Exception as e:
        raise ParseError(f"Polynomial {text!r} is not a polynomial in {', '.join(map(str, symbols))}: {e}")


class RationalPolynomialRing(EuclideanRing):
    """ℚ[x] with monic normalization."""

    tag = "poly"

    def __init__(self, variable: str = "x"):
        self.variable = variable
        self.gen = Symbol(variable)

    def _key(self) -> Tuple:
        return (self.variable,)

    @property
    def zero(self) -> Poly:
        return Poly(0, self.gen, domain=QQ)

    @property
    def one(self) -> Poly:
        return Poly(1, self.gen, domain=QQ)

    @property
    def symbol(self) -> str:
        return f"Q[{self.variable}]"

    @property
    def variables(self) -> Tuple[str, ...]:
        return (self.variable,)

    def convert(self, value: Any) -> Poly:
        if isinstance(value, Poly):
            if value.gens != (self.gen,):
                raise ParseError(f"Polynomial {_format_expr(value.as_expr())} is not in {self.symbol}")
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Poly(value, self.gen, domain=QQ)
        if isinstance(value, str):
            return self.parse(value)
        raise ParseError(f"Cannot interpret {value!r} as an element of {self.symbol}")

    def from_coefficients(self, coefficients: Sequence[Any]) -> Poly:
        """Build a polynomial from a dense coefficient list, constant term first."""
        return Poly.from_list(list(reversed([Fraction(c) for c in coefficients])) or [0], self.gen, domain=QQ)

    def is_zero(self, a: Poly) -> bool:
        return a.is_zero

    def norm(self, a: Poly) -> int:
        return int(a.degree())

    def divmod(self, a: Poly, b: Poly) -> Tuple[Poly, Poly]:
        return a.div(b)

    def gcdex(self, a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
        if a.is_zero and b.is_zero:
            return self.zero, self.zero, self.zero
        if a.is_zero:
            return self.zero, self.unit_normalizer(b), b.monic()
        if b.is_zero:
            return self.unit_normalizer(a), self.zero, a.monic()
        s, t, h = a.gcdex(b)
        return s, t, h

    def unit_normalizer(self, a: Poly) -> Poly:
        return Poly(1 / a.LC(), self.gen, domain=QQ)

    def unit_inverse(self, u: Poly) -> Poly:
        return Poly(1 / u.LC(), self.gen, domain=QQ)

    def is_unit(self, a: Poly) -> bool:
        return not a.is_zero and a.degree() == 0

    def is_prime(self, a: Poly) -> bool:
        if a.is_zero or a.degree() < 1:
            return False
        if a.degree() == 1:
            return True
        return bool(a.is_irreducible)

    def prime_factors(self, a: Poly) -> List[Poly]:
        if a.degree() < 1:
            return []
        _, factors = a.factor_list()
        primes = [self.normalize(f) for f, _ in factors]
        return sorted(primes, key=lambda f: (f.degree(), [str(c) for c in f.all_coeffs()]))

    def torsion_size(self, factors: Sequence[Poly]) -> int:
        return sum(int(f.degree()) for f in factors)

    def parse(self, text: str) -> Poly:
        return _parse_poly(text, [self.gen])

    def format(self, a: Poly) -> str:
        return _format_expr(a.as_expr())


class MultivariatePolynomialRing(WeightRing):
    """ℚ[x_1, …, x_n]; a weight ring only (no division algorithm is used)."""

    tag = "poly"

    def __init__(self, variables: Sequence[str]):
        self._variables = tuple(variables)
        self.gens = tuple(Symbol(v) for v in self._variables)

    def _key(self) -> Tuple:
        return self._variables

    @property
    def variables(self) -> Tuple[str, ...]:
        return self._variables

    @property
    def symbol(self) -> str:
        return f"Q[{','.join(self._variables)}]"

    @property
    def zero(self) -> Poly:
        return Poly(0, *self.gens, domain=QQ)

    @property
    def one(self) -> Poly:
        return Poly(1, *self.gens, domain=QQ)

    def convert(self, value: Any) -> Poly:
        if isinstance(value, Poly):
            if value.gens != self.gens:
                return Poly(value.as_expr(), *self.gens, domain=QQ)
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Poly(value, *self.gens, domain=QQ)
        if isinstance(value, str):
            return self.parse(value)
        raise ParseError(f"Cannot interpret {value!r} as an element of {self.symbol}")

    def is_zero(self, a: Poly) -> bool:
        return a.is_zero

    def divides(self, a: Poly, b: Poly) -> bool:
        if a.is_zero:
            return b.is_zero
        # a single divisor is its own Gröbner basis, so a zero remainder decides membership
        return b.rem(a).is_zero

    def exact_div(self, a: Poly, b: Poly) -> Poly:
        if b.is_zero:
            raise InexactDivisionError(f"Division of {self.format(a)} by zero in {self.symbol}")
        q, r = a.div(b)
        if not r.is_zero:
            raise InexactDivisionError(f"{self.format(b)} does not divide {self.format(a)} in {self.symbol}")
        return q

    def parse(self, text: str) -> Poly:
        return _parse_poly(text, list(self.gens))

    def format(self, a: Poly) -> str:
        return _format_expr(a.as_expr())


class RingFactory:
    """Registry of weight rings keyed by the ring tag used in complex files."""

    _rings: Dict[str, Type[WeightRing]] = {}

    @classmethod
    def register_ring(cls, tag: str, ring_class: Type[WeightRing]) -> None:
        cls._rings[tag] = ring_class

    @classmethod
    def create_ring(cls, tag: str, variables: Sequence[str] = ()) -> WeightRing:
        """Create the weight ring for a file ring tag.

        Args:
            tag: ``"int"``, ``"rational"`` or ``"poly"``
            variables: declared variables for ``"poly"``

        Returns:
            ℚ[x] when a single variable is declared, ℚ[x_1,…,x_n] otherwise

        Raises:
            ParseError: unknown tag or missing variables
        """
        if tag == "poly":
            if not variables:
                raise ParseError("Ring tag 'poly' requires a non-empty variable list")
            if len(variables) == 1:
                return RationalPolynomialRing(variables[0])
            return MultivariatePolynomialRing(variables)
        if tag not in cls._rings:
            raise ParseError(f"Unknown ring tag: {tag!r}")
        return cls._rings[tag]()

    @classmethod
    def get_supported_tags(cls) -> list:
        return sorted(set(cls._rings.keys()) | {"poly"})


RingFactory.register_ring('int', IntegerRing)
RingFactory.register_ring('rational', RationalField)

ZZ_RING = IntegerRing()
QQ_FIELD = RationalField()
