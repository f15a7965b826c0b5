import random

import pytest

from src.algebra.rings import ZZ_RING, RationalPolynomialRing
from src.complexes.filtered import FilteredComplex
from src.complexes.random_complexes import TORSION_WEIGHTS, random_filtration, random_weighted_complex
from src.complexes.simplex import Simplex
from src.complexes.weighted_complex import WeightedComplex


def make_complex(ring, labels, weighted):
    """Build a complex from ``{(label, ...): weight}``."""
    index = {label: i for i, label in enumerate(labels)}
    return WeightedComplex(ring, labels, {Simplex.of(index[v] for v in names): w for names, w in weighted.items()})


def hollow_triangle(ring, vertex_weight, edge_weight):
    return make_complex(ring, ["v0", "v1", "v2"], {
        ("v0",): vertex_weight, ("v1",): vertex_weight, ("v2",): vertex_weight,
        ("v0", "v1"): edge_weight, ("v1", "v2"): edge_weight, ("v0", "v2"): edge_weight,
    })


@pytest.fixture
def path_complex():
    """x - y - z with the middle vertex and both edges weighted 2."""
    return make_complex(ZZ_RING, ["x", "y", "z"], {("x",): 1, ("y",): 2, ("z",): 1, ("x", "y"): 2, ("y", "z"): 2})


@pytest.fixture
def triangle_complex():
    """Hollow triangle, vertices weighted 1 and edges weighted 4."""
    return hollow_triangle(ZZ_RING, 1, 4)


@pytest.fixture
def poly_ring():
    return RationalPolynomialRing("x")


@pytest.fixture
def poly_triangle(poly_ring):
    """Hollow triangle over Q[x] with edges weighted x^2."""
    return hollow_triangle(poly_ring, "1", "x^2")


@pytest.fixture
def edge_into_triangle():
    """Step 0 is the edge [v0, v1] of weight 2, step 1 the hollow triangle around it."""
    K = make_complex(ZZ_RING, ["v0", "v1", "v2"], {
        ("v0",): 1, ("v1",): 1, ("v2",): 1, ("v0", "v1"): 2, ("v1", "v2"): 1, ("v0", "v2"): 1,
    })
    births = {s: 0 if s in (Simplex((0,)), Simplex((1,)), Simplex((0, 1))) else 1 for s in K.simplices}
    return FilteredComplex(K, births, 2)


@pytest.fixture
def vertex_then_pair():
    """Step 0 is the vertex v0, step 1 adds the isolated vertex v1."""
    K = make_complex(ZZ_RING, ["v0", "v1"], {("v0",): 1, ("v1",): 1})
    return FilteredComplex(K, {Simplex((0,)): 0, Simplex((1,)): 1}, 2)


CORPUS_SEED = 20240611


@pytest.fixture
def rng():
    return random.Random(CORPUS_SEED)


# Corpora are built once per session; complexes and filtrations are immutable.
@pytest.fixture(scope="session")
def random_corpus():
    rng = random.Random(CORPUS_SEED)
    return [random_weighted_complex(rng, num_vertices=rng.randint(3, 7), max_dim=rng.choice([1, 2, 3]), max_simplices=40) for _ in range(200)]


@pytest.fixture(scope="session")
def torsion_corpus():
    rng = random.Random(CORPUS_SEED)
    return [random_weighted_complex(rng, num_vertices=rng.randint(3, 6), max_dim=2, max_simplices=25, weights=TORSION_WEIGHTS) for _ in range(100)]


@pytest.fixture(scope="session")
def random_filtrations():
    rng = random.Random(CORPUS_SEED)
    filtrations = []
    for _ in range(100):
        K = random_weighted_complex(rng, num_vertices=rng.randint(3, 5), max_dim=2, max_simplices=15, weights=TORSION_WEIGHTS)
        filtrations.append(random_filtration(rng, K, num_steps=rng.randint(2, 3)))
    return filtrations
