"""Shared fixtures: the two running example complexes and small helpers.

Both examples are 1-dimensional complexes (graphs viewed as simplicial
complexes) on 6 vertices whose moment-angle complex carries a non-trivial
triple Massey product of degree-3 classes.  `family_a_graph` is the minimal
member of the seven-edge obstruction family, `family_b_graph` the minimal
member of the eight-edge family.
"""

import random

import pytest

from zkmassey import (
    GF2,
    QQ,
    GF,
    CohomologyClass,
    SmallGraph,
    build_complex,
    chi,
)

FAMILY_A_EDGES = [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5), (3, 6), (4, 6)]
FAMILY_B_EDGES = [(1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 5), (3, 6)]

# Supports of the standard witness triple (pairwise disjoint non-edges in
# both example graphs).
WITNESS_SUPPORTS = ((1, 2), (3, 4), (5, 6))

ALL_FIELDS = [GF2, GF(3), GF(5), QQ]
FIELD_IDS = ["gf2", "gf3", "gf5", "qq"]


def graph_complex(edges, m=6):
    """1-dimensional complex with the given edges and all of 1..m as vertices."""
    facets = list(edges) + [(v,) for v in range(1, m + 1)]
    return build_complex(m, facets)


def cls(K, field, support, simplex, coeff=None):
    """Cohomology class of the characteristic cocycle chi_{support,simplex}."""
    return CohomologyClass(chi(K, field, support, simplex, coeff))


def witness_classes(K, field):
    """The three degree-3 classes [chi_{J,min J}] for the standard witness."""
    return tuple(cls(K, field, J, (J[0],)) for J in WITNESS_SUPPORTS)


def random_graph(rng, n=6):
    return SmallGraph(n, rng.randrange(1 << (n * (n - 1) // 2)))


def random_complex(rng, max_m=6):
    m = rng.randint(1, max_m)
    facets = [
        tuple(sorted(rng.sample(range(1, m + 1), rng.randint(1, min(3, m)))))
        for _ in range(rng.randint(1, 5))
    ]
    return build_complex(m, facets)


@pytest.fixture
def rng():
    return random.Random(20240824)


@pytest.fixture(scope="session")
def family_a_graph():
    return SmallGraph.from_edges(6, FAMILY_A_EDGES)


@pytest.fixture(scope="session")
def family_b_graph():
    return SmallGraph.from_edges(6, FAMILY_B_EDGES)


@pytest.fixture(scope="session")
def K_a():
    return graph_complex(FAMILY_A_EDGES)


@pytest.fixture(scope="session")
def K_b():
    return graph_complex(FAMILY_B_EDGES)
