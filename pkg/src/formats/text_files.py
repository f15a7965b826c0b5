"""
Plain-text inputs: weighted graphs and simplex lists.

Graph files hold one edge per line as ``u v weight`` with a decimal weight; a line
with a single label declares an isolated vertex. Simplex-list files hold one
simplex per line as whitespace-separated vertex labels. ``#`` starts a comment in
both formats.
"""

import logging
from fractions import Fraction
from pathlib import Path
from typing import List

from src.complexes.simplex import Simplex
from src.complexes.weighted_complex import WeightedComplex
from src.exceptions import ComplexValidationError, ParseError
from src.filtrations.graph import WeightedGraph

logger = logging.getLogger(__name__)


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            yield number, raw, line


def parse_graph(text: str, source: str = "<string>") -> WeightedGraph:
    """Parse a graph file into a ``WeightedGraph``; labels keep first-appearance order.

    Raises:
        ParseError: a line that is not ``u v weight`` or a weight that is not a decimal number
    """
    labels: List[str] = []
    seen = set()
    edges = []
    for number, raw, line in _content_lines(text):
        tokens = line.split()
        if len(tokens) not in (1, 3):
            raise ParseError(f"Expected 'u v weight', got {line!r}", source, number, raw.find(tokens[0]) + 1)
        for label in tokens[:2] if len(tokens) == 3 else tokens:
            if label not in seen:
                seen.add(label)
                labels.append(label)
        if len(tokens) == 3:
            try:
                weight = Fraction(tokens[2])
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"Invalid weight {tokens[2]!r}", source, number, raw.find(tokens[2]) + 1)
            edges.append((tokens[0], tokens[1], weight))
    try:
        graph = WeightedGraph(labels, edges)
    except ComplexValidationError as e:
        raise ParseError(str(e), source)
    logger.info(f"Read graph with {len(labels)} vertices and {len(edges)} edges from {source}")
    return graph


def read_graph(path: str) -> WeightedGraph:
    return parse_graph(Path(path).read_text(encoding='utf-8'), str(path))


def parse_simplex_list(text: str, K: WeightedComplex, source: str = "<string>") -> List[Simplex]:
    """Simplices of ``K`` named by vertex labels, one per line.

    Raises:
        ParseError: a label unknown to ``K`` or a simplex ``K`` does not contain
    """
    simplices = []
    for number, raw, line in _content_lines(text):
        try:
            simplex = K.simplex_from_labels(line.split())
        except ComplexValidationError as e:
            raise ParseError(str(e), source, number)
        if simplex not in K:
            raise ParseError(f"Simplex {{{', '.join(line.split())}}} is not in the complex", source, number)
        simplices.append(simplex)
    return simplices


def read_simplex_list(path: str, K: WeightedComplex) -> List[Simplex]:
    return parse_simplex_list(Path(path).read_text(encoding='utf-8'), K, str(path))
