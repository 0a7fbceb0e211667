"""Small labeled graphs on at most 8 vertices, with brute-force canonical forms.

Vertices are 1..n.  The edge set is a bitmask over the C(n, 2) vertex pairs in
lexicographic pair order: (1,2), (1,3), ..., (1,n), (2,3), ...  The canonical
form of a graph is the minimal edge bitmask over all n! vertex relabelings, so
two graphs are isomorphic exactly when their canonical forms coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

__all__ = [
    "SmallGraph",
    "pair_index",
    "canonical_form",
    "is_isomorphic",
    "complement",
    "isomorphism_witness",
    "all_cliques",
]

MAX_VERTICES = 8


def pair_index(i: int, j: int, n: int) -> int:
    """Bit position of pair {i, j} (1-based, i != j) in the lex pair order."""
    if i > j:
        i, j = j, i
    if not (1 <= i < j <= n):
        raise ValueError(f"pair ({i},{j}) out of range for n={n}")
    return (i - 1) * n - (i - 1) * i // 2 + (j - i) - 1


@dataclass(frozen=True)
class SmallGraph:
    """Labeled graph on vertices 1..n (n <= 8) with bitmask edge set."""

    n: int
    mask: int

    def __post_init__(self):
        if not (0 <= self.n <= MAX_VERTICES):
            raise ValueError(f"SmallGraph supports at most {MAX_VERTICES} vertices")
        if self.mask >> (self.n * (self.n - 1) // 2):
            raise ValueError("edge mask has bits outside the pair range")

    @classmethod
    def from_edges(cls, n: int, edges) -> "SmallGraph":
        mask = 0
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge ({u},{v})")
            mask |= 1 << pair_index(u, v, n)
        return cls(n, mask)

    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, j)
            for i, j in combinations(range(1, self.n + 1), 2)
            if self.mask >> pair_index(i, j, self.n) & 1
        )

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.mask >> pair_index(u, v, self.n) & 1)

    def degree(self, v: int) -> int:
        return sum(1 for u in range(1, self.n + 1) if u != v and self.has_edge(u, v))

    def valency_sequence(self) -> tuple[int, ...]:
        """Vertex degrees sorted in non-increasing order."""
        return tuple(sorted((self.degree(v) for v in range(1, self.n + 1)), reverse=True))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(u for u in range(1, self.n + 1) if u != v and self.has_edge(u, v))

    def permuted(self, perm) -> "SmallGraph":
        """Relabel: vertex v becomes perm[v-1]."""
        mask = 0
        for u, v in self.edges():
            mask |= 1 << pair_index(perm[u - 1], perm[v - 1], self.n)
        return SmallGraph(self.n, mask)

    def distance(self, u: int, v: int) -> int:
        """BFS edge distance; -1 if disconnected."""
        if u == v:
            return 0
        seen = {u}
        frontier = [u]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for w in frontier:
                for x in self.neighbors(w):
                    if x == v:
                        return d
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
            frontier = nxt
        return -1


def _perm_bit_maps(n: int) -> list[list[int]]:
    npairs = n * (n - 1) // 2
    maps = []
    for perm in permutations(range(1, n + 1)):
        table = [0] * npairs
        for i, j in combinations(range(1, n + 1), 2):
            table[pair_index(i, j, n)] = pair_index(perm[i - 1], perm[j - 1], n)
        maps.append(table)
    return maps


def _remap(mask: int, table: list[int]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << table[low.bit_length() - 1]
        mask ^= low
    return out


_canon6: list[int] | None = None
_canon_cache: dict[tuple[int, int], int] = {}


def _canon6_table() -> list[int]:
    """Canonical form of every labeled 6-vertex graph, built orbit by orbit."""
    global _canon6
    if _canon6 is None:
        maps = _perm_bit_maps(6)
        table = [-1] * (1 << 15)
        for mask in range(1 << 15):
            if table[mask] >= 0:
                continue
            orbit = {_remap(mask, t) for t in maps}
            canon = min(orbit)
            for g in orbit:
                table[g] = canon
        _canon6 = table
    return _canon6


def canonical_form(g: SmallGraph) -> int:
    """Minimal edge bitmask over all vertex relabelings."""
    if g.n == 6:
        return _canon6_table()[g.mask]
    key = (g.n, g.mask)
    canon = _canon_cache.get(key)
    if canon is None:
        canon = min(_remap(g.mask, t) for t in _perm_bit_maps(g.n)) if g.n else 0
        _canon_cache[key] = canon
    return canon


def is_isomorphic(g: SmallGraph, h: SmallGraph) -> bool:
    if g.n != h.n:
        return False
    return canonical_form(g) == canonical_form(h)


def complement(g: SmallGraph) -> SmallGraph:
    full = (1 << (g.n * (g.n - 1) // 2)) - 1
    return SmallGraph(g.n, full & ~g.mask)


def isomorphism_witness(g: SmallGraph, h: SmallGraph):
    """First permutation (perm[v-1] = image of v) with g.permuted(perm) == h, or None."""
    if g.n != h.n:
        return None
    for perm in permutations(range(1, g.n + 1)):
        if g.permuted(perm).mask == h.mask:
            return perm
    return None


def all_cliques(n: int, adjacency: list[int]):
    """Yield every clique of a graph as a vertex bitmask, the empty one included.

    adjacency[v] is the neighbor bitmask of vertex v (0-based bits).
    """
    yield 0
    stack = [(1 << v, adjacency[v] & ~((1 << (v + 1)) - 1)) for v in range(n - 1, -1, -1)]
    while stack:
        clique, cand = stack.pop()
        yield clique
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            c ^= low
            stack.append((clique | low, cand & adjacency[v] & ~((1 << (v + 1)) - 1)))
