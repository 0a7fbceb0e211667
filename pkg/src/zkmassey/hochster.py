"""Multigraded cochain model of a moment-angle complex.

H^n decomposes over vertex subsets J as the reduced cohomology of the full
subcomplexes K_J in simplicial degree n - |J| - 1.  A MultiCochain collects
one simplicial cochain per support subset, all in a single total degree.

The product of basis cochains chi_L (support I) and chi_M (support J) is zero
unless I and J are disjoint; otherwise it is c * chi_{L u M} on support I u J,
where chi_{L u M} is read as zero when L u M is not a face, and the sign c is

    c = eps(L, I) * eps(M, J) * zeta * eps(L u M, I u J),
    zeta = prod over k in I \\ L of eps(k, {k} u (J \\ M)),

with eps(j, S) = (-1)**(r-1) for j the r-th smallest element of S and
eps(T, S) the product over elements of T.  The involution bar scales a total
degree n cochain by (-1)**(1+n).
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from itertools import combinations

from .cochains import (
    SimplicialCochain,
    cohomology,
    coboundary,
    make_cochain,
    validate_cochain,
)
from .fields import Field
from .linalg import SpanTracker, get_ops
from .simplicial import SimplicialComplex

__all__ = [
    "eps",
    "eps_set",
    "MultiCochain",
    "chi",
    "zero_cochain",
    "add",
    "sub",
    "scale",
    "cup",
    "bar",
    "total_coboundary",
    "is_cocycle",
    "is_zero_class",
    "CohomologyClass",
    "cup_classes",
    "BettiTable",
    "betti_table",
    "ClassVectorizer",
    "random_scalar",
    "random_cochain",
    "random_cocycle",
]


def eps(j: int, J) -> int:
    """(-1)**(r-1) where j is the r-th smallest element of J."""
    js = sorted(J)
    try:
        r = js.index(j)
    except ValueError:
        raise ValueError(f"{j} is not an element of {js}") from None
    return -1 if r & 1 else 1


def eps_set(L, J) -> int:
    """Product of eps(j, J) over j in L."""
    sign = 1
    for j in L:
        sign *= eps(j, J)
    return sign


class MultiCochain:
    """Homogeneous total-degree element of the multigraded cochain model."""

    __slots__ = ("complex", "field", "degree", "pieces")

    def __init__(self, K: SimplicialComplex, field: Field, degree: int, pieces, validate=True):
        norm: dict[tuple[int, ...], SimplicialCochain] = {}
        for J, piece in dict(pieces).items():
            js = tuple(sorted(J))
            if piece.is_zero():
                continue
            if piece.support != js:
                raise ValueError(f"piece support {piece.support} does not match key {js}")
            if piece.degree != degree - len(js) - 1:
                raise ValueError(
                    f"piece on {js} has simplicial degree {piece.degree}, "
                    f"expected {degree - len(js) - 1} for total degree {degree}"
                )
            if validate:
                validate_cochain(K, field, piece)
            norm[js] = piece
        self.complex = K
        self.field = field
        self.degree = degree
        self.pieces = norm

    def is_zero(self) -> bool:
        return not self.pieces

    def supports(self):
        return sorted(self.pieces, key=lambda J: (len(J), J))

    def __eq__(self, other):
        return (
            isinstance(other, MultiCochain)
            and self.complex == other.complex
            and self.field == other.field
            and self.degree == other.degree
            and self.pieces == other.pieces
        )

    def __repr__(self):
        parts = []
        for J in self.supports():
            for s, c in self.pieces[J].terms:
                parts.append(f"{self.field.fmt(c)}*chi_{''.join(map(str, s)) or 'o'}@{J}")
        return "MultiCochain(" + (" + ".join(parts) if parts else "0") + f"; deg={self.degree})"


def zero_cochain(K: SimplicialComplex, field: Field, degree: int) -> MultiCochain:
    return MultiCochain(K, field, degree, {})


def chi(K: SimplicialComplex, field: Field, support, simplex, coeff=None) -> MultiCochain:
    """Single basis term: coeff * chi_simplex on the given support."""
    sup = tuple(sorted(set(support)))
    s = tuple(sorted(simplex))
    if coeff is None:
        coeff = field.one
    degree = len(sup) + len(s)
    piece = make_cochain(field, sup, len(s) - 1, {s: coeff})
    return MultiCochain(K, field, degree, {sup: piece})


def _check_pair(a: MultiCochain, b: MultiCochain) -> None:
    if a.complex != b.complex:
        raise ValueError("cochains live on different complexes")
    if a.field != b.field:
        raise ValueError("cochains use different coefficient fields")


def add(a: MultiCochain, b: MultiCochain) -> MultiCochain:
    _check_pair(a, b)
    if a.degree != b.degree:
        raise ValueError(f"cannot add degrees {a.degree} and {b.degree}")
    field = a.field
    pieces = dict(a.pieces)
    for J, piece in b.pieces.items():
        mine = pieces.get(J)
        if mine is None:
            pieces[J] = piece
            continue
        merged = dict(mine.terms)
        for s, c in piece.terms:
            prev = merged.get(s)
            val = c if prev is None else field.add(prev, c)
            if field.is_zero(val):
                merged.pop(s, None)
            else:
                merged[s] = val
        pieces[J] = SimplicialCochain(J, mine.degree, tuple(sorted(merged.items())))
    return MultiCochain(a.complex, field, a.degree, pieces, validate=False)


def scale(a: MultiCochain, c) -> MultiCochain:
    field = a.field
    if field.is_zero(c):
        return zero_cochain(a.complex, field, a.degree)
    pieces = {}
    for J, piece in a.pieces.items():
        terms = tuple((s, field.mul(c, v)) for s, v in piece.terms)
        pieces[J] = SimplicialCochain(J, piece.degree, terms)
    return MultiCochain(a.complex, field, a.degree, pieces, validate=False)


def sub(a: MultiCochain, b: MultiCochain) -> MultiCochain:
    return add(a, scale(b, b.field.neg(b.field.one)))


def bar(a: MultiCochain) -> MultiCochain:
    """The sign involution: multiply a total degree n cochain by (-1)**(1+n)."""
    if (1 + a.degree) % 2 == 0:
        return a
    return scale(a, a.field.neg(a.field.one))


def cup(a: MultiCochain, b: MultiCochain) -> MultiCochain:
    """Multigraded cochain product; supports must be disjoint piecewise."""
    _check_pair(a, b)
    K, field = a.complex, a.field
    faces = K.simplices
    acc: dict[tuple[int, ...], dict] = {}
    for I, x in a.pieces.items():
        iset = set(I)
        rank_I = {v: i for i, v in enumerate(I)}
        for J, y in b.pieces.items():
            if iset & set(J):
                continue
            IJ = tuple(sorted(I + J))
            rank_J = {v: i for i, v in enumerate(J)}
            rank_IJ = {v: i for i, v in enumerate(IJ)}
            bucket = acc.setdefault(IJ, {})
            for M, t in y.terms:
                mset = set(M)
                jm = [v for v in J if v not in mset]
                par_M = sum(rank_J[v] for v in M)
                for L, s in x.terms:
                    U = tuple(sorted(L + M))
                    if U not in faces:
                        continue
                    parity = par_M
                    parity += sum(rank_I[v] for v in L)
                    parity += sum(rank_IJ[v] for v in U)
                    for k in iset - set(L):
                        parity += bisect_left(jm, k)
                    val = field.mul(s, t)
                    if parity & 1:
                        val = field.neg(val)
                    prev = bucket.get(U)
                    val = val if prev is None else field.add(prev, val)
                    if field.is_zero(val):
                        bucket.pop(U, None)
                    else:
                        bucket[U] = val
    degree = a.degree + b.degree
    pieces = {}
    for IJ, bucket in acc.items():
        if bucket:
            pieces[IJ] = SimplicialCochain(IJ, degree - len(IJ) - 1, tuple(sorted(bucket.items())))
    return MultiCochain(K, field, degree, pieces, validate=False)


def total_coboundary(a: MultiCochain) -> MultiCochain:
    """Support-preserving differential applied piecewise."""
    pieces = {}
    for J, piece in a.pieces.items():
        da = coboundary(a.complex, a.field, piece)
        if not da.is_zero():
            pieces[J] = da
    return MultiCochain(a.complex, a.field, a.degree + 1, pieces, validate=False)


def is_cocycle(a: MultiCochain) -> bool:
    return total_coboundary(a).is_zero()


def is_zero_class(a: MultiCochain) -> bool:
    """True when a cocycle is a total coboundary (checked summand by summand)."""
    for J, piece in a.pieces.items():
        smd = cohomology(a.complex, J, piece.degree, a.field)
        if not smd.is_coboundary(piece):
            return False
    return True


class CohomologyClass:
    """A cocycle considered up to coboundaries."""

    __slots__ = ("rep",)

    def __init__(self, rep: MultiCochain):
        if not is_cocycle(rep):
            raise ValueError("representative is not a cocycle")
        self.rep = rep

    @property
    def complex(self):
        return self.rep.complex

    @property
    def field(self):
        return self.rep.field

    @property
    def degree(self):
        return self.rep.degree

    def is_zero(self) -> bool:
        return is_zero_class(self.rep)

    def same_class(self, other: "CohomologyClass") -> bool:
        return is_zero_class(sub(self.rep, other.rep))

    def __repr__(self):
        return f"[{self.rep!r}]"


def cup_classes(x: CohomologyClass, y: CohomologyClass) -> CohomologyClass:
    """Product of classes via representatives (representative independent)."""
    return CohomologyClass(cup(x.rep, y.rep))


@dataclass
class BettiTable:
    """Hochster decomposition dimensions of H^*(Z_K)."""

    m: int
    field_key: tuple
    by_subset: bool
    entries: dict  # (J, p) -> betti, or (|J|, p) -> summed betti; nonzero only
    totals: dict  # total degree n -> dim H^n; nonzero only

    def total_dim(self, n: int) -> int:
        return self.totals.get(n, 0)


def betti_table(
    K: SimplicialComplex, field: Field, by_subset: bool = False, max_m: int = 16
) -> BettiTable:
    """Betti numbers of every summand H~^p(K_J), aggregated as requested."""
    if K.m > max_m:
        raise ValueError(
            f"betti_table enumerates 2^m subsets; m={K.m} exceeds the cap {max_m} "
            "(raise max_m explicitly to override)"
        )
    entries: dict = {}
    totals: dict = {}
    verts = K.vertices
    for size in range(len(verts) + 1):
        for J in combinations(verts, size):
            for p in range(-1, size):
                b = cohomology(K, J, p, field).betti
                if not b:
                    continue
                key = (J, p) if by_subset else (size, p)
                entries[key] = entries.get(key, 0) + b
                n = p + size + 1
                totals[n] = totals.get(n, 0) + b
    return BettiTable(K.m, field.key, by_subset, entries, totals)


class ClassVectorizer:
    """Coordinates of same-degree classes across a fixed family of supports."""

    def __init__(self, K: SimplicialComplex, field: Field, degree: int, supports):
        self.K = K
        self.field = field
        self.degree = degree
        self.ops = get_ops(field)
        self.blocks = []
        offset = 0
        for J in sorted({tuple(sorted(J)) for J in supports}, key=lambda J: (len(J), J)):
            smd = cohomology(K, J, degree - len(J) - 1, field)
            self.blocks.append((J, smd, offset))
            offset += smd.betti
        self.ncols = offset

    def vec(self, a: MultiCochain):
        """Packed coordinate row of the class of a cocycle."""
        if a.degree != self.degree:
            raise ValueError(f"expected total degree {self.degree}, got {a.degree}")
        covered = set()
        coeffs = [self.field.zero] * self.ncols
        for J, smd, offset in self.blocks:
            covered.add(J)
            piece = a.pieces.get(J)
            if piece is None:
                continue
            for i, c in enumerate(smd.coords(piece)):
                coeffs[offset + i] = c
        for J, piece in a.pieces.items():
            if J not in covered:
                smd = cohomology(self.K, J, piece.degree, self.field)
                if not smd.is_coboundary(piece):
                    raise ValueError(f"class has an unexpected nonzero piece on {J}")
        return self.ops.from_coeffs(coeffs)

    def tracker(self) -> SpanTracker:
        return SpanTracker(self.ops, self.ncols)


def random_scalar(field: Field, rng, nonzero: bool = False):
    """Seeded random scalar; small numerators and denominators over Q."""
    if field.kind == "gf2":
        return 1 if nonzero else rng.randrange(2)
    if field.kind == "gfp":
        return rng.randrange(1, field.p) if nonzero else rng.randrange(field.p)
    num = rng.randint(1, 4) if nonzero else rng.randint(-4, 4)
    if nonzero and rng.randrange(2):
        num = -num
    return field.from_int(num) / rng.randint(1, 3)


def random_cochain(K: SimplicialComplex, field: Field, degree: int, rng, max_terms: int = 4):
    """Seeded random homogeneous cochain of the given total degree."""
    candidates = []
    verts = K.vertices
    for size in range(len(verts) + 1):
        p = degree - size - 1
        if p < -1 or p > K.dim:
            continue
        for J in combinations(verts, size):
            faces = K.faces_in(J, p)
            if faces:
                candidates.append((J, p, faces))
    out = zero_cochain(K, field, degree)
    if not candidates:
        return out
    for _ in range(rng.randint(1, max_terms)):
        J, p, faces = candidates[rng.randrange(len(candidates))]
        s = faces[rng.randrange(len(faces))]
        term = chi(K, field, J, s, random_scalar(field, rng, nonzero=True))
        out = add(out, term)
    return out


def random_cocycle(K: SimplicialComplex, field: Field, degree: int, rng, max_terms: int = 3):
    """Seeded random cocycle: summand basis combination plus a coboundary."""
    out = zero_cochain(K, field, degree)
    verts = K.vertices
    picks = []
    for size in range(len(verts) + 1):
        p = degree - size - 1
        if p < -1 or p > K.dim:
            continue
        for J in combinations(verts, size):
            smd = cohomology(K, J, p, field)
            for b in smd.basis:
                picks.append((J, b))
    for _ in range(rng.randint(0, max_terms)):
        if not picks:
            break
        J, b = picks[rng.randrange(len(picks))]
        c = random_scalar(field, rng, nonzero=True)
        term = MultiCochain(
            K,
            field,
            degree,
            {J: SimplicialCochain(J, b.degree, tuple((s, field.mul(c, v)) for s, v in b.terms))},
            validate=False,
        )
        out = add(out, term)
    out = add(out, total_coboundary(random_cochain(K, field, degree - 1, rng)))
    return out
