"""
Seeded generators for randomized experiments.

Every generator takes a ``random.Random`` so a seed reproduces the whole corpus.
Weights are assigned from the top dimension downwards so the divisibility
condition holds by construction: a face receives a divisor of the gcd of the
weights of its cofaces.
"""

import logging
import random
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, List, Sequence, Tuple

from sympy import divisors

from src.algebra.rings import ZZ_RING
from src.complexes.filtered import FilteredComplex
from src.complexes.simplex import Simplex
from src.complexes.weighted_complex import WeightedComplex

logger = logging.getLogger(__name__)

DEFAULT_WEIGHTS = (1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64)
TORSION_WEIGHTS = (1, 2, 3, 4, 6, 12)


def random_simplex_set(rng: random.Random, num_vertices: int, max_dim: int, max_simplices: int, density: float = 0.5) -> List[Simplex]:
    """Random face-closed simplex set: random maximal simplices plus all their faces."""
    vertices = list(range(num_vertices))
    chosen = {Simplex((v,)) for v in vertices}
    attempts = 0
    while attempts < 4 * max_simplices:
        attempts += 1
        dim = rng.randint(1, max_dim)
        if dim + 1 > num_vertices or rng.random() > density:
            continue
        top = Simplex.of(rng.sample(vertices, dim + 1))
        closure = {top} | set(top.proper_faces())
        if len(chosen | closure) > max_simplices:
            continue
        chosen |= closure
    return sorted(chosen, key=lambda s: (s.dimension, s.vertices))


def assign_divisible_weights(rng: random.Random, simplices: Sequence[Simplex], weights: Sequence[int] = DEFAULT_WEIGHTS) -> Dict[Simplex, int]:
    """Weights from ``weights`` (top-down) with every face weight dividing every coface weight."""
    assigned: Dict[Simplex, int] = {}
    cofaces: Dict[Simplex, List[Simplex]] = {s: [] for s in simplices}
    for s in simplices:
        for _, face in s.faces():
            cofaces[face].append(s)
    for s in sorted(simplices, key=lambda s: -s.dimension):
        bound = 0
        for c in cofaces[s]:
            bound = int(ZZ_RING.gcd(bound, assigned[c]))
        if bound == 0:
            assigned[s] = rng.choice(list(weights))
        else:
            candidates = [d for d in divisors(bound) if d in weights] or [1]
            assigned[s] = rng.choice(candidates)
    return assigned


def random_weighted_complex(rng: random.Random, num_vertices: int = 6, max_dim: int = 2, max_simplices: int = 40,
                            weights: Sequence[int] = DEFAULT_WEIGHTS) -> WeightedComplex:
    """A random valid integer-weighted complex."""
    simplices = random_simplex_set(rng, num_vertices, max_dim, max_simplices)
    labels = [f"v{i}" for i in range(num_vertices)]
    return WeightedComplex(ZZ_RING, labels, assign_divisible_weights(rng, simplices, weights))


def random_filtration(rng: random.Random, complex: WeightedComplex, num_steps: int = 3) -> FilteredComplex:
    """Random births that never place a coface before its faces."""
    births: Dict[Simplex, int] = {}
    for s in complex.simplices:
        lowest = max((births[f] for _, f in s.faces()), default=0)
        births[s] = rng.randint(lowest, num_steps - 1)
    return FilteredComplex(complex, births, num_steps)


def random_cover(rng: random.Random, complex: WeightedComplex) -> Tuple[List[Simplex], List[Simplex]]:
    """Split the maximal simplices at random; each part is the closure of its maximal simplices."""
    simplices = complex.simplex_set()
    maximal = [s for s in complex.simplices if not any(s != t and s.is_face_of(t) for t in simplices)]
    parts: Tuple[set, set] = (set(), set())
    for s in maximal:
        side = rng.randint(0, 2)
        targets = [parts[0], parts[1]] if side == 2 else [parts[side]]
        for part in targets:
            part.add(s)
            part.update(s.proper_faces())
    order = lambda s: (s.dimension, s.vertices)
    return sorted(parts[0], key=order), sorted(parts[1], key=order)


def random_weighted_graph(rng: random.Random, num_vertices: int = 8, edge_probability: float = 0.5,
                          distinct_weights: int = 5) -> Tuple[List[str], List[Tuple[str, str, Fraction]]]:
    """Random simple graph with decimal edge weights drawn from a small pool so ties occur."""
    labels = [f"n{i}" for i in range(num_vertices)]
    pool = [Fraction(rng.randint(1, 99), 100) for _ in range(distinct_weights)]
    edges = []
    for u, v in combinations(range(num_vertices), 2):
        if rng.random() < edge_probability:
            edges.append((labels[u], labels[v], rng.choice(pool)))
    return labels, edges


def generate_corpus(seed: int, count: int, **kwargs: Any) -> List[WeightedComplex]:
    rng = random.Random(seed)
    corpus = [random_weighted_complex(rng, **kwargs) for _ in range(count)]
    logger.info(f"Generated {count} random complexes from seed {seed}")
    return corpus
