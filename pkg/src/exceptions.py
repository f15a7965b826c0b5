from typing import Any, Dict, Optional


class WeightedHomologyError(Exception):
    """Base exception for every failure raised by the toolkit"""
    pass


class ParseError(WeightedHomologyError):
    """Raised when an input file or option string cannot be parsed"""

    def __init__(self, message: str, source: Optional[str] = None, line: Optional[int] = None, column: Optional[int] = None):
        location = ""
        if source is not None:
            location = source
            if line is not None:
                location += f":{line}"
                if column is not None:
                    location += f":{column}"
            location += ": "
        super().__init__(f"{location}{message}")
        self.source = source
        self.line = line
        self.column = column


class SemanticError(WeightedHomologyError):
    """Raised when well-formed input describes an invalid computation"""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.context = context or {}


class ComplexValidationError(SemanticError):
    """Raised when a complex is not face-closed or breaks the divisibility condition"""
    pass


class ZeroWeightError(SemanticError):
    """Raised when a weighted boundary would divide by a zero face weight"""
    pass


class InexactDivisionError(SemanticError):
    """Raised when an exact quotient of ring elements does not exist"""
    pass


class DimensionMismatchError(SemanticError):
    """Raised when matrix or vector dimensions do not agree"""
    pass


class NotPrimeError(SemanticError):
    """Raised when a prime (irreducible) element is required"""
    pass


class StepIndexError(SemanticError):
    """Raised when a filtration step or persistence index is out of range"""
    pass


class CoverError(SemanticError):
    """Raised when two subcomplexes do not cover a complex"""
    pass


class ChainOrderError(SemanticError):
    """Raised when an ideal chain or weight list is not descending / division-ordered"""
    pass


class ComplexTooLargeError(SemanticError):
    """Raised when a complex exceeds the configured simplex cap"""
    pass


class MissingPrimeError(SemanticError):
    """Raised when Bockstein tables do not cover every relevant prime"""
    pass


class InvariantBreachError(SemanticError):
    """Raised when an internal algebraic invariant fails to hold"""
    pass
