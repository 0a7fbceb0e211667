"""Abstract simplicial complexes on a fixed ground vertex set.

A complex always contains the empty simplex.  Ground vertices that support no
face at all (ghost vertices) are permitted: they matter for the moment-angle
interpretation, where a ghost vertex contributes a circle factor.  Simplices
are stored as ascending tuples of the original vertex labels.
"""

from __future__ import annotations

from itertools import combinations

from .graphs import SmallGraph, all_cliques

__all__ = [
    "SimplicialComplex",
    "build_complex",
    "full_subcomplex",
    "one_skeleton",
    "flag_complex",
]


class SimplicialComplex:
    """Immutable complex; ``vertices`` is the ground set, faces may omit some."""

    __slots__ = ("vertices", "simplices", "_vset", "_faces_in", "_cache")

    def __init__(self, vertices, simplices):
        verts = tuple(sorted(vertices))
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate ground vertices")
        faces = frozenset(simplices)
        if () not in faces:
            raise ValueError("complex must contain the empty simplex")
        vset = set(verts)
        for s in faces:
            if list(s) != sorted(set(s)):
                raise ValueError(f"simplex {s} is not an ascending vertex tuple")
            if not vset.issuperset(s):
                raise ValueError(f"simplex {s} uses vertices outside the ground set")
            for k in range(len(s)):
                if s[:k] + s[k + 1 :] not in faces:
                    raise ValueError(f"complex is not closed under faces: {s}")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "simplices", faces)
        object.__setattr__(self, "_vset", vset)
        object.__setattr__(self, "_faces_in", {})
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    @property
    def m(self) -> int:
        return len(self.vertices)

    @property
    def dim(self) -> int:
        return max((len(s) for s in self.simplices)) - 1

    def __contains__(self, simplex) -> bool:
        return tuple(simplex) in self.simplices

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.vertices == other.vertices
            and self.simplices == other.simplices
        )

    def __repr__(self):
        return f"SimplicialComplex(m={self.m}, faces={len(self.simplices)}, dim={self.dim})"

    def normalize_subset(self, J) -> tuple[int, ...]:
        js = tuple(sorted(set(J)))
        if not self._vset.issuperset(js):
            raise ValueError(f"subset {js} is not contained in the ground set")
        return js

    def faces_in(self, J, p: int):
        """Ascending-sorted tuple of the p-simplices of the full subcomplex on J."""
        js = self.normalize_subset(J)
        key = (js, p)
        got = self._faces_in.get(key)
        if got is None:
            if p < -1:
                got = ()
            elif p == -1:
                got = ((),)
            else:
                jset = set(js)
                got = tuple(
                    sorted(s for s in self.simplices if len(s) == p + 1 and jset.issuperset(s))
                )
            self._faces_in[key] = got
        return got

    def faces(self, p: int):
        return self.faces_in(self.vertices, p)

    def facets(self):
        """Maximal faces (the empty simplex only for the void-ish complex)."""
        out = []
        for s in self.simplices:
            if not any(s != t and set(s).issubset(t) for t in self.simplices):
                out.append(s)
        return sorted(out, key=lambda s: (len(s), s))


def build_complex(m: int, facets) -> SimplicialComplex:
    """Complex on ground set 1..m generated by the given facets."""
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"vertex count must be a non-negative integer: {m!r}")
    faces = {()}
    for facet in facets:
        fs = tuple(sorted(facet))
        if len(set(fs)) != len(fs):
            raise ValueError(f"facet {list(facet)} repeats a vertex")
        if fs and (fs[0] < 1 or fs[-1] > m):
            raise ValueError(f"facet {list(facet)} uses vertices outside 1..{m}")
        for k in range(len(fs) + 1):
            faces.update(combinations(fs, k))
    return SimplicialComplex(range(1, m + 1), faces)


def full_subcomplex(K: SimplicialComplex, J) -> SimplicialComplex:
    """Faces of K contained in J, on ground set J (original labels kept)."""
    js = K.normalize_subset(J)
    jset = set(js)
    return SimplicialComplex(js, {s for s in K.simplices if jset.issuperset(s)})


def one_skeleton(K: SimplicialComplex, as_graph: bool | None = None):
    """Edges and vertices of K.

    Returns a SmallGraph on rank-relabeled vertices when the ground set has at
    most 8 elements (or when as_graph=True), otherwise the list of edges in
    original labels.
    """
    small = K.m <= 8
    if as_graph is None:
        as_graph = small
    if as_graph and not small:
        raise ValueError(f"SmallGraph form needs at most 8 vertices, ground set has {K.m}")
    edges = [s for s in sorted(K.simplices) if len(s) == 2]
    if not as_graph:
        return edges
    rank = {v: i + 1 for i, v in enumerate(K.vertices)}
    return SmallGraph.from_edges(K.m, [(rank[u], rank[v]) for u, v in edges])


def flag_complex(graph, m: int | None = None) -> SimplicialComplex:
    """Clique complex of a graph given as SmallGraph or edge list with m."""
    if isinstance(graph, SmallGraph):
        n = graph.n
        edges = graph.edges()
        if m is not None and m != n:
            raise ValueError(f"vertex count {m} disagrees with graph on {n} vertices")
    else:
        if m is None:
            raise ValueError("edge-list form requires the vertex count m")
        n = m
        edges = [tuple(sorted(e)) for e in graph]
    if n > 60:
        raise ValueError("flag_complex supports at most 60 vertices")
    adjacency = [0] * n
    for u, v in edges:
        if not 1 <= u < v <= n:
            raise ValueError(f"edge ({u},{v}) out of range for m={n}")
        adjacency[u - 1] |= 1 << (v - 1)
        adjacency[v - 1] |= 1 << (u - 1)
    faces = set()
    for cmask in all_cliques(n, adjacency):
        simplex = []
        w = cmask
        while w:
            low = w & -w
            simplex.append(low.bit_length())
            w ^= low
        faces.add(tuple(simplex))
    return SimplicialComplex(range(1, n + 1), faces)
