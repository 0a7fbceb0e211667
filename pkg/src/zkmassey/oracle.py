"""Brute-force verification of the obstruction classification.

The main loop evaluates, for every labeled six-vertex graph, whether some
triple of degree-3 classes has a non-trivial triple product, and compares
that against catalog membership of the graph.  Candidate triples take one
generator class per non-edge support pair; supports must be pairwise
disjoint or the product degenerates.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .errors import InternalCheckError
from .fields import Field, field_from_key
from .graphs import SmallGraph, canonical_form, complement
from .hochster import (
    ClassVectorizer,
    CohomologyClass,
    add,
    bar,
    chi,
    cup,
    is_zero_class,
)
from .massey import (
    MasseyResult,
    _product_generators,
    _solve_total,
    triple_massey,
)
from .obstruction import build_catalog, catalog_masks
from .simplicial import SimplicialComplex, build_complex, flag_complex

__all__ = [
    "WitnessTriple",
    "candidate_supports",
    "candidate_triples",
    "massey_witness_search",
    "complex_from_graph",
    "VerificationReport",
    "verify_theorem",
    "derive_minimal_obstructions",
    "LEMMA_LETTER_EDGES",
    "verify_lemma",
]

ALL_MASKS = 1 << 15


@dataclass(frozen=True)
class WitnessTriple:
    """A non-trivial triple: support pairs and the full evaluation."""

    s1: tuple
    s2: tuple
    s3: tuple
    result: MasseyResult


def candidate_supports(K: SimplicialComplex) -> list:
    """Support pairs carrying degree-3 classes: non-edges with both endpoints
    vertices of K."""
    out = []
    for u, v in combinations(K.vertices, 2):
        if (u,) in K and (v,) in K and (u, v) not in K:
            out.append((u, v))
    return out


def candidate_triples(K: SimplicialComplex) -> list:
    """Ordered pairwise-disjoint support triples in lexicographic order."""
    sups = candidate_supports(K)
    out = []
    for s1 in sups:
        for s2 in sups:
            if set(s1) & set(s2):
                continue
            for s3 in sups:
                if (set(s1) | set(s2)) & set(s3):
                    continue
                out.append((s1, s2, s3))
    return out


def _generator_class(K, field, cache, support):
    got = cache.get(support)
    if got is None:
        got = CohomologyClass(chi(K, field, support, (support[0],)))
        cache[support] = got
    return got


def _triple_is_nontrivial(K, field, alpha1, alpha2, alpha3) -> bool:
    """Same verdict as triple_massey, skipping result assembly.

    Undefined products and products whose representative is already a
    coboundary report False without building the indeterminacy span.
    """
    a1, a2, a3 = alpha1.rep, alpha2.rep, alpha3.rep
    w12 = cup(bar(a1), a2)
    if not is_zero_class(w12):
        return False
    w23 = cup(bar(a2), a3)
    if not is_zero_class(w23):
        return False
    a12 = _solve_total(K, field, w12)
    a23 = _solve_total(K, field, w23)
    omega = add(cup(bar(a1), a23), cup(bar(a12), a3))
    if is_zero_class(omega):
        return False
    degree = alpha1.degree + alpha2.degree + alpha3.degree - 1
    gens = _product_generators(K, field, alpha1, alpha3, degree, barred=False)
    sups = set(omega.pieces)
    for w, _side, _h in gens:
        sups.update(w.pieces)
    vz = ClassVectorizer(K, field, degree, sups)
    tracker = vz.tracker()
    for w, _side, _h in gens:
        tracker.add(vz.vec(w))
    return not tracker.contains(vz.vec(omega))


def massey_witness_search(K: SimplicialComplex, field: Field, within=None):
    """First support triple with a non-trivial product, in lexicographic
    order, evaluated in full; None when every candidate is trivial.

    within restricts candidate supports to pairs inside a vertex subset.
    """
    cache: dict = {}
    triples = candidate_triples(K)
    if within is not None:
        inside = set(within)
        triples = [t for t in triples if set(t[0]) | set(t[1]) | set(t[2]) <= inside]
    for s1, s2, s3 in triples:
        a1 = _generator_class(K, field, cache, s1)
        a2 = _generator_class(K, field, cache, s2)
        a3 = _generator_class(K, field, cache, s3)
        if _triple_is_nontrivial(K, field, a1, a2, a3):
            result = triple_massey(K, field, a1, a2, a3)
            if not (result.defined and result.trivial is False):
                raise InternalCheckError("fast and full evaluations disagree")
            return WitnessTriple(s1, s2, s3, result)
    return None


def _has_witness(K: SimplicialComplex, field: Field) -> bool:
    cache: dict = {}
    for s1, s2, s3 in candidate_triples(K):
        a1 = _generator_class(K, field, cache, s1)
        a2 = _generator_class(K, field, cache, s2)
        a3 = _generator_class(K, field, cache, s3)
        if _triple_is_nontrivial(K, field, a1, a2, a3):
            return True
    return False


def complex_from_graph(g: SmallGraph, mode: str) -> SimplicialComplex:
    """The complex swept for a graph: its one-dimensional realization
    (mode "graph") or its clique complex (mode "flag")."""
    if mode == "graph":
        facets = [(v,) for v in range(1, g.n + 1)] + list(g.edges())
        return build_complex(g.n, facets)
    if mode == "flag":
        return flag_complex(g)
    raise ValueError(f"unknown mode {mode!r}; expected 'graph' or 'flag'")


@dataclass
class VerificationReport:
    """Outcome of sweeping every labeled six-vertex graph."""

    field_key: tuple
    mode: str
    total: int
    detected_count: int
    witness_count: int
    disagreements: list
    elapsed_seconds: float
    detected_by_class: dict

    @property
    def agree(self) -> bool:
        return not self.disagreements

    def summary(self) -> str:
        status = "agree" if self.agree else f"{len(self.disagreements)} DISAGREEMENTS"
        return (
            f"mode={self.mode} field={self.field_key} graphs={self.total} "
            f"detected={self.detected_count} witnesses={self.witness_count} "
            f"{status} in {self.elapsed_seconds:.1f}s"
        )

    def to_doc(self, include_timing: bool = True) -> dict:
        doc = {
            "mode": self.mode,
            "total_graphs": self.total,
            "detected": self.detected_count,
            "witnesses": self.witness_count,
            "agree": self.agree,
            "disagreements": self.disagreements,
            "detected_by_class": {str(k): v for k, v in sorted(self.detected_by_class.items())},
        }
        if include_timing:
            doc["elapsed_seconds"] = round(self.elapsed_seconds, 3)
        return doc


def _sweep_range(field: Field, mode: str, start: int, stop: int, progress=None) -> dict:
    """Detection-versus-witness comparison for a contiguous mask range."""
    masks = catalog_masks()
    cat = build_catalog()
    out = {"detected": 0, "witness": 0, "disagreements": [], "by_class": {}}
    for mask in range(start, stop):
        g = SmallGraph(6, mask)
        canon = canonical_form(g)
        detected = canon in masks
        K = complex_from_graph(g, mode)
        found = _has_witness(K, field)
        if detected:
            out["detected"] += 1
            ci = cat.class_index(canon)
            out["by_class"][ci] = out["by_class"].get(ci, 0) + 1
        if found:
            out["witness"] += 1
        if detected != found:
            out["disagreements"].append(
                {"mask": mask, "canon": canon, "detected": detected, "witness": found}
            )
        if progress is not None and (mask + 1) % 1024 == 0:
            progress(mask + 1, stop)
    return out


def _sweep_worker(args):
    key, mode, start, stop = args
    return _sweep_range(field_from_key(key), mode, start, stop)


def verify_theorem(
    field: Field, mode: str = "graph", jobs: int = 1, progress=None
) -> VerificationReport:
    """Sweep all 2^15 labeled six-vertex graphs comparing catalog detection
    against brute-force witness search.

    jobs > 1 splits the mask range over worker processes; partial results are
    reduced in ascending mask order, so the report is identical either way.
    progress, honored in the serial path, is called with (done, total) every
    1024 graphs.
    """
    t0 = time.perf_counter()
    if jobs <= 1:
        parts = [_sweep_range(field, mode, 0, ALL_MASKS, progress)]
    else:
        step = 2048
        bounds = [(field.key, mode, s, min(s + step, ALL_MASKS)) for s in range(0, ALL_MASKS, step)]
        import multiprocessing

        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            parts = pool.map(_sweep_worker, bounds)
    detected_count = sum(p["detected"] for p in parts)
    witness_count = sum(p["witness"] for p in parts)
    disagreements = [d for p in parts for d in p["disagreements"]]
    detected_by_class: dict = {}
    for p in parts:
        for ci, cnt in p["by_class"].items():
            detected_by_class[ci] = detected_by_class.get(ci, 0) + cnt
    elapsed = time.perf_counter() - t0
    return VerificationReport(
        field.key,
        mode,
        ALL_MASKS,
        detected_count,
        witness_count,
        disagreements,
        elapsed,
        detected_by_class,
    )


def derive_minimal_obstructions(field: Field, mode: str = "graph") -> list:
    """Recover the catalog from scratch: canonical six-vertex graphs, one per
    isomorphism class, whose complex admits a witness triple."""
    reps = sorted({canonical_form(SmallGraph(6, mask)) for mask in range(ALL_MASKS)})
    out = []
    for canon in reps:
        K = complex_from_graph(SmallGraph(6, canon), mode)
        if _has_witness(K, field):
            out.append(canon)
    return out


# The eight graphs as drawn, vertices a..f numbered 1..6 in drawing order.
_BASE7 = ((1, 6), (1, 2), (2, 4), (4, 5), (3, 5), (1, 3), (5, 6))
LEMMA_LETTER_EDGES = {
    "a": _BASE7,
    "b": _BASE7 + ((2, 6),),
    "c": _BASE7 + ((3, 6),),
    "d": _BASE7 + ((2, 6), (3, 6)),
    "e": _BASE7 + ((2, 6), (3, 4)),
    "f": _BASE7 + ((2, 6), (3, 6), (3, 4)),
    "g": tuple(e for e in _BASE7 if e != (1, 6)) + ((2, 6), (3, 6), (3, 4)),
    "h": tuple(e for e in _BASE7 if e not in ((1, 6), (3, 5)))
    + ((2, 6), (3, 6), (3, 4)),
}

LEMMA_VALENCIES = {
    "a": (3, 3, 2, 2, 2, 2),
    "b": (3, 3, 3, 3, 2, 2),
    "c": (3, 3, 3, 3, 2, 2),
    "d": (4, 3, 3, 3, 3, 2),
    "e": (3, 3, 3, 3, 3, 3),
    "f": (4, 4, 3, 3, 3, 3),
    "g": (4, 3, 3, 3, 3, 2),
    "h": (3, 3, 3, 3, 2, 2),
}


def _vertices_of_valency(g: SmallGraph, d: int):
    return [v for v in range(1, g.n + 1) if g.degree(v) == d]


def verify_lemma() -> dict:
    """Check that the eight cataloged graphs are pairwise non-isomorphic.

    Uses an independent edge-list encoding of the eight graphs, then checks
    the valency sequences, the three stated tie-breakers (adjacency of the
    valency-2 pair; their distance; adjacency of the valency-2 and valency-4
    vertices), and that the letters biject onto the catalog classes.
    """
    cat = build_catalog()
    letters = {}
    graphs = {}
    ok = True
    for letter in "abcdefgh":
        g = SmallGraph.from_edges(6, LEMMA_LETTER_EDGES[letter])
        graphs[letter] = g
        canon = canonical_form(g)
        ci = cat.class_index(canon)
        entry = {
            "edges": sorted(LEMMA_LETTER_EDGES[letter]),
            "valencies": g.valency_sequence(),
            "valencies_ok": g.valency_sequence() == LEMMA_VALENCIES[letter],
            "canon": canon,
            "class_index": ci,
        }
        ok = ok and entry["valencies_ok"] and ci is not None
        letters[letter] = entry
    pairwise = all(
        canonical_form(graphs[x]) != canonical_form(graphs[y])
        for x, y in combinations("abcdefgh", 2)
    )
    ok = ok and pairwise
    class_indices = [letters[x]["class_index"] for x in "abcdefgh"]
    bijection = sorted(class_indices, key=lambda v: (v is None, v)) == list(range(8))
    ok = ok and bijection

    def val2_pair_distance(letter):
        g = graphs[letter]
        pair = _vertices_of_valency(g, 2)
        if len(pair) != 2:
            return None
        return g.distance(pair[0], pair[1])

    def val2_val4_adjacent(letter):
        g = graphs[letter]
        twos = _vertices_of_valency(g, 2)
        fours = _vertices_of_valency(g, 4)
        if len(twos) != 1 or len(fours) != 1:
            return None
        return g.has_edge(twos[0], fours[0])

    discriminators = {
        "val2_pair_distance": {x: val2_pair_distance(x) for x in ("b", "c", "h")},
        "val2_val4_adjacent": {x: val2_val4_adjacent(x) for x in ("d", "g")},
    }
    disc_ok = (
        discriminators["val2_pair_distance"] == {"b": 2, "c": 1, "h": 3}
        and discriminators["val2_val4_adjacent"] == {"d": False, "g": True}
    )
    ok = ok and disc_ok
    return {
        "ok": ok,
        "pairwise_non_isomorphic": pairwise,
        "letters_biject_classes": bijection,
        "discriminators_ok": disc_ok,
        "discriminators": discriminators,
        "letters": letters,
    }
