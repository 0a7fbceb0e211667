"""Catalog of six-vertex graphs forcing non-trivial triple products.

The catalog is generated by two labeled families on vertices 1..6:

  family A: required edges {13,14,24,25,35,36,46} plus any subset of the
            optional chords {15,16,26} (eight labeled graphs);
  family B: required edges {14,15,16,24,25,26,35,36} plus optionally {46}
            (two labeled graphs).

Up to isomorphism the ten labeled graphs fall into exactly eight classes.
Their complements are the path 1-2-3-4-5-6 with chords: for family A the
unused optional chords, for family B the chord {13} plus {46} when that
edge is absent.  A complex exhibits an obstruction when its one skeleton
contains an induced six-vertex subgraph isomorphic to a catalog member.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InternalCheckError
from .graphs import SmallGraph, canonical_form, complement, isomorphism_witness
from .simplicial import SimplicialComplex

__all__ = [
    "FAMILY_A_REQUIRED",
    "FAMILY_A_OPTIONAL",
    "FAMILY_B_REQUIRED",
    "FAMILY_B_OPTIONAL",
    "PATH_EDGES",
    "Template",
    "ObstructionClass",
    "Catalog",
    "build_catalog",
    "catalog_masks",
    "DetectionHit",
    "detect",
    "has_obstruction",
]

FAMILY_A_REQUIRED = ((1, 3), (1, 4), (2, 4), (2, 5), (3, 5), (3, 6), (4, 6))
FAMILY_A_OPTIONAL = ((1, 5), (1, 6), (2, 6))
FAMILY_B_REQUIRED = ((1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 5), (3, 6))
FAMILY_B_OPTIONAL = ((4, 6),)
PATH_EDGES = ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6))

EXPECTED_CLASS_COUNT = 8
EXPECTED_VALENCIES = sorted(
    [
        (3, 3, 2, 2, 2, 2),
        (3, 3, 3, 3, 2, 2),
        (3, 3, 3, 3, 2, 2),
        (3, 3, 3, 3, 2, 2),
        (4, 3, 3, 3, 3, 2),
        (4, 3, 3, 3, 3, 2),
        (3, 3, 3, 3, 3, 3),
        (4, 4, 3, 3, 3, 3),
    ]
)


@dataclass(frozen=True)
class Template:
    """One labeled catalog graph: a family base plus chosen optional edges."""

    name: str
    family: str
    extras: tuple
    graph: SmallGraph


@dataclass(frozen=True)
class ObstructionClass:
    """Isomorphism class of catalog graphs."""

    index: int
    canon_mask: int
    representative: SmallGraph
    member_names: tuple
    valencies: tuple


class Catalog:
    """The ten labeled templates and their eight isomorphism classes."""

    def __init__(self, templates, classes):
        self.templates = tuple(templates)
        self.classes = tuple(classes)
        self._by_canon = {c.canon_mask: c.index for c in self.classes}

    def class_index(self, canon_mask: int):
        """Class index for a canonical six-vertex mask, or None."""
        return self._by_canon.get(canon_mask)


def _subsets_in_order(items):
    for size in range(len(items) + 1):
        yield from combinations(items, size)


def _make_templates():
    out = []
    for family, required, optional in (
        ("A", FAMILY_A_REQUIRED, FAMILY_A_OPTIONAL),
        ("B", FAMILY_B_REQUIRED, FAMILY_B_OPTIONAL),
    ):
        for extras in _subsets_in_order(optional):
            name = family
            if extras:
                name += "+" + ",".join(f"{u}{v}" for u, v in extras)
            g = SmallGraph.from_edges(6, required + extras)
            out.append(Template(name, family, extras, g))
    return out


def _check_complements(templates):
    """Every template complement must be the labeled path with known chords."""
    for t in templates:
        chords = []
        if t.family == "A":
            chords = [e for e in FAMILY_A_OPTIONAL if e not in t.extras]
        else:
            chords = [(1, 3)]
            if (4, 6) not in t.extras:
                chords.append((4, 6))
        expected = SmallGraph.from_edges(6, PATH_EDGES + tuple(chords))
        if complement(t.graph) != expected:
            raise InternalCheckError(f"complement of template {t.name} is not the expected path with chords")


_catalog = None


def build_catalog() -> Catalog:
    """Construct and self-check the catalog (cached)."""
    global _catalog
    if _catalog is not None:
        return _catalog
    templates = _make_templates()
    if len(templates) != 10:
        raise InternalCheckError("expected ten labeled templates")
    _check_complements(templates)
    grouped: dict[int, list[Template]] = {}
    for t in templates:
        grouped.setdefault(canonical_form(t.graph), []).append(t)
    if len(grouped) != EXPECTED_CLASS_COUNT:
        raise InternalCheckError(
            f"expected {EXPECTED_CLASS_COUNT} isomorphism classes, found {len(grouped)}"
        )
    classes = []
    for index, canon in enumerate(sorted(grouped)):
        members = grouped[canon]
        rep = members[0].graph
        classes.append(
            ObstructionClass(
                index,
                canon,
                rep,
                tuple(t.name for t in members),
                rep.valency_sequence(),
            )
        )
    if sorted(c.valencies for c in classes) != EXPECTED_VALENCIES:
        raise InternalCheckError("catalog valency multiset mismatch")
    _catalog = Catalog(templates, classes)
    return _catalog


def catalog_masks() -> frozenset:
    """Canonical masks of the eight classes."""
    return frozenset(c.canon_mask for c in build_catalog().classes)


@dataclass(frozen=True)
class DetectionHit:
    """An induced obstruction: which vertices, which class, and how they map
    onto the class representative."""

    vertices: tuple
    class_index: int
    mapping: dict


def _skeleton_edges(K):
    if isinstance(K, SmallGraph):
        return tuple(range(1, K.n + 1)), K.edges()
    if isinstance(K, SimplicialComplex):
        return K.vertices, K.faces(1)
    raise TypeError(f"expected a SimplicialComplex or SmallGraph, got {type(K).__name__}")


def _induced_six(adj, sub):
    idx = {v: i + 1 for i, v in enumerate(sub)}
    edges = []
    for u, v in combinations(sub, 2):
        if v in adj.get(u, ()):
            edges.append((idx[u], idx[v]))
    return SmallGraph.from_edges(6, edges), idx


def _adjacency(edges):
    adj: dict[int, set] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return adj


def detect(K, max_m: int = 25) -> list:
    """All induced six-vertex obstructions in the one skeleton of K.

    Hits are reported in ascending subset order; each carries the class index
    and a vertex mapping onto the class representative.
    """
    verts, edges = _skeleton_edges(K)
    if len(verts) > max_m:
        raise ValueError(
            f"detect enumerates six-vertex subsets; {len(verts)} vertices exceeds "
            f"the cap {max_m} (raise max_m explicitly to override)"
        )
    cat = build_catalog()
    adj = _adjacency(edges)
    hits = []
    for sub in combinations(verts, 6):
        g, idx = _induced_six(adj, sub)
        ci = cat.class_index(canonical_form(g))
        if ci is None:
            continue
        perm = isomorphism_witness(g, cat.classes[ci].representative)
        if perm is None:
            raise InternalCheckError("canonical forms matched but no witness found")
        hits.append(DetectionHit(tuple(sub), ci, {v: perm[idx[v] - 1] for v in sub}))
    return hits


def has_obstruction(K, max_m: int = 25) -> bool:
    """True when some induced six-vertex subgraph lies in the catalog."""
    verts, edges = _skeleton_edges(K)
    if len(verts) > max_m:
        raise ValueError(
            f"has_obstruction enumerates six-vertex subsets; {len(verts)} vertices "
            f"exceeds the cap {max_m} (raise max_m explicitly to override)"
        )
    masks = catalog_masks()
    adj = _adjacency(edges)
    for sub in combinations(verts, 6):
        g, _ = _induced_six(adj, sub)
        if canonical_form(g) in masks:
            return True
    return False
