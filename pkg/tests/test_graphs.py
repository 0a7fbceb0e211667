import itertools
import random

import pytest

from zkmassey import SmallGraph, canonical_form, complement, is_isomorphic, isomorphism_witness
from zkmassey.graphs import all_cliques, pair_index

from conftest import random_graph


def test_pair_index_enumerates_lex_pairs():
    for n in range(2, 9):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        assert [pair_index(i, j, n) for i, j in pairs] == list(range(len(pairs)))
        assert pair_index(3, 1, n if n >= 3 else 8) == pair_index(1, 3, n if n >= 3 else 8)
    with pytest.raises(ValueError):
        pair_index(1, 1, 6)
    with pytest.raises(ValueError):
        pair_index(1, 7, 6)


def test_from_edges_round_trip():
    g = SmallGraph.from_edges(5, [(1, 2), (4, 2), (3, 5)])
    assert g.edges() == ((1, 2), (2, 4), (3, 5))
    assert g.has_edge(2, 1) and not g.has_edge(1, 3)
    assert g.degree(2) == 2 and g.degree(5) == 1
    assert g.neighbors(2) == (1, 4)
    assert g.valency_sequence() == (2, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        SmallGraph.from_edges(4, [(2, 2)])
    with pytest.raises(ValueError):
        SmallGraph(4, 1 << 6)
    with pytest.raises(ValueError):
        SmallGraph(9, 0)


def test_permuted_is_a_group_action(rng):
    for _ in range(50):
        n = rng.randint(2, 6)
        g = random_graph(rng, n)
        p = list(range(1, n + 1))
        q = list(range(1, n + 1))
        rng.shuffle(p)
        rng.shuffle(q)
        pq = [q[x - 1] for x in p]
        assert g.permuted(p).permuted(q) == g.permuted(pq)
        ident = tuple(range(1, n + 1))
        assert g.permuted(ident) == g


def test_canonical_form_is_isomorphism_invariant(rng):
    for _ in range(60):
        n = rng.randint(1, 6)
        g = random_graph(rng, n)
        p = list(range(1, n + 1))
        rng.shuffle(p)
        h = g.permuted(p)
        assert canonical_form(g) == canonical_form(h)
        assert is_isomorphic(g, h)
        # the canonical mask is itself attained by some relabeling
        assert is_isomorphic(g, SmallGraph(n, canonical_form(g)))


def test_non_isomorphic_pairs_detected():
    path4 = SmallGraph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
    star4 = SmallGraph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
    cycle4 = SmallGraph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert not is_isomorphic(path4, star4)  # same edge count, different degrees
    assert not is_isomorphic(path4, cycle4)
    assert not is_isomorphic(path4, SmallGraph(5, path4.mask))  # different n
    # K3 + isolated vertex vs path: same size, same max degree multiset test
    tri = SmallGraph.from_edges(4, [(1, 2), (2, 3), (1, 3)])
    assert not is_isomorphic(tri, path4)


def test_canonical_count_on_four_vertices():
    # 11 isomorphism classes of graphs on 4 labeled vertices
    canon = {canonical_form(SmallGraph(4, m)) for m in range(1 << 6)}
    assert len(canon) == 11


def test_canonical_count_on_six_vertices():
    canon = {canonical_form(SmallGraph(6, m)) for m in range(1 << 15)}
    assert len(canon) == 156


def test_complement_involution(rng):
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 6))
        assert complement(complement(g)) == g
        for u, v in itertools.combinations(range(1, g.n + 1), 2):
            assert g.has_edge(u, v) != complement(g).has_edge(u, v)


def test_distance():
    path = SmallGraph.from_edges(6, [(i, i + 1) for i in range(1, 6)])
    assert path.distance(1, 6) == 5
    assert path.distance(2, 4) == 2
    assert path.distance(3, 3) == 0
    two = SmallGraph.from_edges(4, [(1, 2), (3, 4)])
    assert two.distance(1, 3) == -1


def test_isomorphism_witness(rng):
    for _ in range(30):
        n = rng.randint(2, 6)
        g = random_graph(rng, n)
        p = list(range(1, n + 1))
        rng.shuffle(p)
        h = g.permuted(p)
        w = isomorphism_witness(g, h)
        assert w is not None and g.permuted(w) == h
    p3 = SmallGraph.from_edges(3, [(1, 2), (2, 3)])
    k3 = SmallGraph.from_edges(3, [(1, 2), (2, 3), (1, 3)])
    assert isomorphism_witness(p3, k3) is None
    assert isomorphism_witness(p3, SmallGraph(4, 0)) is None


def brute_cliques(n, adjacency):
    out = set()
    for r in range(n + 1):
        for vs in itertools.combinations(range(n), r):
            if all(adjacency[u] >> v & 1 for u, v in itertools.combinations(vs, 2)):
                out.add(sum(1 << v for v in vs))
    return out


def test_all_cliques_matches_brute_force(rng):
    for _ in range(30):
        n = rng.randint(1, 7)
        g = random_graph(rng, n)
        adjacency = [
            sum(1 << (u - 1) for u in g.neighbors(v)) for v in range(1, n + 1)
        ]
        got = list(all_cliques(n, adjacency))
        assert len(got) == len(set(got))  # no clique listed twice
        assert set(got) == brute_cliques(n, adjacency)
