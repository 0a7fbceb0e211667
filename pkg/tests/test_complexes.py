import itertools

import pytest

from zkmassey import (
    SimplicialComplex,
    SmallGraph,
    build_complex,
    flag_complex,
    full_subcomplex,
    one_skeleton,
)

from conftest import FAMILY_A_EDGES, graph_complex, random_graph


def test_build_complex_closure():
    K = build_complex(4, [(1, 2, 3), (3, 4)])
    assert () in K and (2,) in K and (1, 3) in K and (1, 2, 3) in K
    assert (1, 4) not in K and (1, 2, 3, 4) not in K
    assert K.m == 4 and K.dim == 2
    assert K.facets() == [(3, 4), (1, 2, 3)]
    # every face of every simplex is present
    for s in K.simplices:
        for r in range(len(s)):
            assert tuple(c for i, c in enumerate(s) if i != r) in K


def test_build_complex_validation():
    with pytest.raises(ValueError):
        build_complex(3, [(1, 4)])
    with pytest.raises(ValueError):
        build_complex(3, [(0, 1)])
    with pytest.raises(ValueError):
        build_complex(3, [(2, 2)])
    with pytest.raises(ValueError):
        build_complex(-1, [])
    with pytest.raises(ValueError):
        SimplicialComplex([1, 2], [(1,), (2,)])  # missing the empty simplex
    with pytest.raises(ValueError):
        SimplicialComplex([1, 2], [(), (1, 2)])  # not downward closed
    with pytest.raises(ValueError):
        SimplicialComplex([1, 2], [(), (2, 1)])  # not ascending


def test_ghost_vertices_allowed():
    # ground vertex 3 supports no face; it still counts toward m
    K = build_complex(3, [(1, 2)])
    assert K.m == 3 and (3,) not in K
    assert K.vertices == (1, 2, 3)
    assert K.faces(0) == ((1,), (2,))


def test_empty_and_point_complexes():
    E = build_complex(0, [])
    assert E.m == 0 and E.dim == -1 and E.simplices == frozenset({()})
    P = build_complex(1, [(1,)])
    assert P.dim == 0 and P.facets() == [(1,)]


def test_immutability_and_equality():
    K = build_complex(2, [(1, 2)])
    with pytest.raises(AttributeError):
        K.vertices = ()
    assert K == build_complex(2, [(1, 2), (1,)])
    assert K != build_complex(2, [(1,), (2,)])
    assert K != build_complex(3, [(1, 2)])


def test_faces_in():
    K = graph_complex(FAMILY_A_EDGES)
    assert K.faces_in((1, 3, 4), 1) == ((1, 3), (1, 4))
    assert K.faces_in((4, 3, 1), 1) == ((1, 3), (1, 4))  # subset order ignored
    assert K.faces_in((1, 3), 0) == ((1,), (3,))
    assert K.faces_in((2, 6), 1) == ()
    assert K.faces_in((1, 2), -1) == ((),)
    assert K.faces_in((1, 2), -2) == ()
    with pytest.raises(ValueError):
        K.faces_in((1, 7), 0)


def test_full_subcomplex_keeps_labels():
    K = build_complex(5, [(1, 2, 3), (3, 4), (5,)])
    L = full_subcomplex(K, (2, 3, 4))
    assert L.vertices == (2, 3, 4)
    assert (2, 3) in L and (3, 4) in L and (2, 4) not in L
    assert L.m == 3 and L.dim == 1
    # empty subset gives the complex with only the empty simplex
    Z = full_subcomplex(K, ())
    assert Z.m == 0 and Z.simplices == frozenset({()})


def test_one_skeleton_forms():
    K = build_complex(4, [(1, 2, 3), (3, 4)])
    g = one_skeleton(K)
    assert isinstance(g, SmallGraph)
    assert g.edges() == ((1, 2), (1, 3), (2, 3), (3, 4))
    assert one_skeleton(K, as_graph=False) == [(1, 2), (1, 3), (2, 3), (3, 4)]
    big = build_complex(9, [(1, 2)])
    assert one_skeleton(big) == [(1, 2)]
    with pytest.raises(ValueError):
        one_skeleton(big, as_graph=True)


def test_flag_complex_of_complete_graph():
    K = flag_complex(SmallGraph.from_edges(3, [(1, 2), (1, 3), (2, 3)]))
    assert (1, 2, 3) in K and K.dim == 2
    assert len(K.simplices) == 8  # full simplex on 3 vertices


def test_flag_complex_fills_cliques_only(rng):
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 7))
        K = flag_complex(g)
        assert K.m == g.n
        for size in range(1, g.n + 1):
            for vs in itertools.combinations(range(1, g.n + 1), size):
                is_clique = all(g.has_edge(u, v) for u, v in itertools.combinations(vs, 2))
                assert (vs in K) == is_clique
        # round trip through the edge set
        assert one_skeleton(K, as_graph=False) == list(g.edges())


def test_one_skeleton_flag_round_trip(rng):
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 6))
        assert one_skeleton(flag_complex(g)) == g


def test_flag_complex_edge_list_form():
    K = flag_complex([(1, 2), (2, 3)], m=4)
    assert (1, 2) in K and (1, 3) not in K and K.m == 4
    with pytest.raises(ValueError):
        flag_complex([(1, 2)])
    with pytest.raises(ValueError):
        flag_complex([(1, 5)], m=4)
    with pytest.raises(ValueError):
        flag_complex(SmallGraph(3, 0), m=4)


def test_graph_complex_has_no_triangles():
    # the 1-dimensional complex keeps edges but never fills a triangle
    K = graph_complex([(1, 2), (1, 3), (2, 3)], m=3)
    assert K.dim == 1 and (1, 2, 3) not in K
