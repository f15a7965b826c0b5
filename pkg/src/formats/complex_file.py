"""
JSON complex and filtration files.

A complex file looks like::

    {
      "ring": "int",
      "vertices": ["v0", "v1", "v2"],
      "simplices": [
        {"vertices": ["v0"], "weight": "1"},
        {"vertices": ["v0", "v1"], "weight": "4"}
      ]
    }

``"ring": "poly"`` needs a ``"variables"`` list. Weights are strings so that large
integers and polynomials survive unchanged. A filtration file adds
``"num_steps"`` and a ``"birth"`` per simplex record, plus optional ``"thresholds"``
and ``"step_ideals"`` (the generators of the ideal behind each step).
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from src.algebra.rings import RingFactory, WeightRing
from src.complexes.filtered import FilteredComplex
from src.complexes.ideals import Ideal, make_ideal
from src.complexes.simplex import Simplex
from src.complexes.weighted_complex import WeightedComplex, close_faces
from src.exceptions import ParseError, SemanticError
from src.utils.error_logger import CustomJSONEncoder

logger = logging.getLogger(__name__)


def _load_json(text: str, source: str) -> Dict[str, Any]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, source, e.lineno, e.colno)
    if not isinstance(data, dict):
        raise ParseError("Top level must be a JSON object", source, 1, 1)
    return data


def _require(data: Dict[str, Any], key: str, kind: type, source: str, where: str = "") -> Any:
    if key not in data:
        raise ParseError(f"Missing field {key!r}{where}", source)
    value = data[key]
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise ParseError(f"Field {key!r}{where} must be a {kind.__name__}", source)
    return data[key]


def _ring_from(data: Dict[str, Any], source: str) -> WeightRing:
    tag = _require(data, 'ring', str, source)
    variables = data.get('variables', [])
    if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
        raise ParseError("Field 'variables' must be a list of strings", source)
    try:
        return RingFactory.create_ring(tag, variables)
    except ParseError as e:
        raise ParseError(str(e), source)


def _parse_records(data: Dict[str, Any], source: str, with_births: bool) -> Tuple[WeightRing, List[str], Dict[Simplex, Any], Dict[Simplex, int]]:
    ring = _ring_from(data, source)
    labels = _require(data, 'vertices', list, source)
    if not all(isinstance(v, str) for v in labels):
        raise ParseError("Vertex labels must be strings", source)
    if len(set(labels)) != len(labels):
        raise ParseError("Vertex labels must be distinct", source)
    index = {label: i for i, label in enumerate(labels)}
    weights: Dict[Simplex, Any] = {}
    births: Dict[Simplex, int] = {}
    for n, record in enumerate(_require(data, 'simplices', list, source)):
        where = f" in simplex record {n}"
        if not isinstance(record, dict):
            raise ParseError(f"Simplex record {n} must be an object", source)
        names = _require(record, 'vertices', list, source, where)
        try:
            simplex = Simplex.of(index[name] for name in names)
        except KeyError as e:
            raise ParseError(f"Unknown vertex {e.args[0]!r}{where}", source)
        except SemanticError as e:
            raise ParseError(f"{e}{where}", source)
        if simplex in weights:
            raise ParseError(f"Duplicate simplex {names}{where}", source)
        raw = record.get('weight', '1')
        if isinstance(raw, bool) or not isinstance(raw, (str, int)):
            raise ParseError(f"Weight{where} must be a string", source)
        try:
            weights[simplex] = ring.parse(str(raw))
        except ParseError as e:
            raise ParseError(f"{e}{where}", source)
        if with_births:
            births[simplex] = _require(record, 'birth', int, source, where)
    return ring, labels, weights, births


def parse_complex(text: str, source: str = "<string>", close: bool = False) -> WeightedComplex:
    """Parse a complex file; ``close`` fills missing faces with weight 1.

    Raises:
        ParseError: malformed JSON or records
    """
    ring, labels, weights, _ = _parse_records(_load_json(text, source), source, with_births=False)
    if close:
        weights = close_faces(ring, weights)
    K = WeightedComplex(ring, labels, weights)
    logger.info(f"Read {K!r} from {source}")
    return K


def read_complex(path: str, close: bool = False) -> WeightedComplex:
    return parse_complex(Path(path).read_text(encoding='utf-8'), str(path), close)


def _parse_step_ideals(data: Dict[str, Any], ring: WeightRing, num_steps: int, source: str) -> Optional[List[Ideal]]:
    records = data.get('step_ideals')
    if records is None:
        return None
    if not isinstance(records, list) or not all(isinstance(r, list) and all(isinstance(g, str) for g in r) for r in records):
        raise ParseError("Field 'step_ideals' must be a list of generator lists", source)
    if len(records) != num_steps:
        raise ParseError(f"Field 'step_ideals' has {len(records)} entries for {num_steps} steps", source)
    try:
        return [make_ideal(ring, [ring.parse(g) for g in generators]) for generators in records]
    except ParseError as e:
        raise ParseError(str(e), source)


def parse_filtration(text: str, source: str = "<string>") -> FilteredComplex:
    """Parse a filtration file.

    Raises:
        ParseError: malformed JSON or records
        ComplexValidationError, StepIndexError: births that do not form a filtration
    """
    data = _load_json(text, source)
    ring, labels, weights, births = _parse_records(data, source, with_births=True)
    num_steps = _require(data, 'num_steps', int, source)
    thresholds = data.get('thresholds')
    if thresholds is not None:
        thresholds = [ring.parse(str(t)) for t in thresholds]
    step_ideals = _parse_step_ideals(data, ring, num_steps, source)
    F = FilteredComplex(WeightedComplex(ring, labels, weights), births, num_steps, thresholds=thresholds, step_ideals=step_ideals)
    logger.info(f"Read {F!r} from {source}")
    return F


def read_filtration(path: str) -> FilteredComplex:
    return parse_filtration(Path(path).read_text(encoding='utf-8'), str(path))


def _header(K: WeightedComplex) -> Dict[str, Any]:
    header: Dict[str, Any] = {'ring': K.ring.tag}
    variables = getattr(K.ring, 'variables', None)
    if variables:
        header['variables'] = list(variables)
    header['vertices'] = list(K.vertex_labels)
    return header


def complex_to_dict(K: WeightedComplex) -> Dict[str, Any]:
    data = _header(K)
    data['simplices'] = [{'vertices': [K.vertex_labels[v] for v in s.vertices], 'weight': K.ring.format(K.weight(s))} for s in K.simplices]
    return data


def filtration_to_dict(F: FilteredComplex) -> Dict[str, Any]:
    K = F.complex
    data = _header(K)
    data['num_steps'] = F.num_steps
    if F.thresholds is not None:
        data['thresholds'] = [K.ring.format(t) for t in F.thresholds]
    if F.step_ideals is not None:
        data['step_ideals'] = [[ideal.ring.format(g) for g in ideal.generators()] for ideal in F.step_ideals]
    data['simplices'] = [{'vertices': [K.vertex_labels[v] for v in s.vertices], 'weight': K.ring.format(K.weight(s)), 'birth': F.birth(s)}
                         for s in K.simplices]
    return data


def dumps(data: Dict[str, Any]) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False, cls=CustomJSONEncoder) + "\n"


def write_complex(K: WeightedComplex, path: Optional[str] = None) -> str:
    text = dumps(complex_to_dict(K))
    if path:
        Path(path).write_text(text, encoding='utf-8')
        logger.info(f"Wrote {K!r} to {path}")
    return text


def write_filtration(F: FilteredComplex, path: Optional[str] = None) -> str:
    text = dumps(filtration_to_dict(F))
    if path:
        Path(path).write_text(text, encoding='utf-8')
        logger.info(f"Wrote {F!r} to {path}")
    return text
