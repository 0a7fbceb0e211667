"""Reduced simplicial cochains of full subcomplexes, with exact cohomology.

Cochains are dual to ascending-ordered simplices; the empty simplex is a
first-class basis element in degree -1.  The coboundary follows the ascending
orientation convention: for a p-simplex L and a coface M = L + {v}, the
coefficient of chi_M in d(chi_L) is (-1)**i where v is the i-th vertex of M
counting from 0.  In particular d(chi_empty) sums chi_v over the vertices
present in the subcomplex.

All bases are ordered by the sorted simplex tuples, and every solver output is
the canonical one determined by the reduced row echelon form, so identical
inputs give identical cochains on every run and backend.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field
from .linalg import get_ops
from .simplicial import SimplicialComplex

__all__ = [
    "SimplicialCochain",
    "make_cochain",
    "validate_cochain",
    "coboundary",
    "CohomologySummand",
    "cohomology",
    "solve_coboundary",
]


@dataclass(frozen=True)
class SimplicialCochain:
    """Cochain on the full subcomplex K_J: support J, degree p, sparse terms."""

    support: tuple[int, ...]
    degree: int
    terms: tuple  # sorted ((simplex, scalar), ...) with nonzero scalars

    def items(self):
        return self.terms

    def coeff(self, simplex):
        for s, c in self.terms:
            if s == simplex:
                return c
        return None

    def is_zero(self) -> bool:
        return not self.terms


def make_cochain(field: Field, support, degree: int, terms) -> SimplicialCochain:
    """Normalise a {simplex: scalar} mapping into a SimplicialCochain."""
    sup = tuple(sorted(set(support)))
    merged: dict = {}
    for simplex, c in dict(terms).items():
        s = tuple(simplex)
        if len(s) != degree + 1:
            raise ValueError(f"simplex {s} does not have degree {degree}")
        if not set(s).issubset(sup):
            raise ValueError(f"simplex {s} is not contained in the support {sup}")
        if not field.is_zero(c):
            merged[s] = c
    return SimplicialCochain(sup, degree, tuple(sorted(merged.items())))


def validate_cochain(K: SimplicialComplex, field: Field, a: SimplicialCochain) -> None:
    allowed = set(K.faces_in(a.support, a.degree))
    for s, c in a.terms:
        if s not in allowed:
            raise ValueError(f"simplex {s} is not a face of the subcomplex on {a.support}")
        if field.is_zero(c):
            raise ValueError(f"zero coefficient stored for {s}")


def _coface_sign(pos: int) -> int:
    return -1 if pos & 1 else 1


def coboundary(K: SimplicialComplex, field: Field, a: SimplicialCochain) -> SimplicialCochain:
    """d(a) within the full subcomplex on a.support."""
    validate_cochain(K, field, a)
    out: dict = {}
    faces = K.simplices
    for s, c in a.terms:
        sset = set(s)
        for v in a.support:
            if v in sset:
                continue
            pos = sum(1 for w in s if w < v)
            coface = s[:pos] + (v,) + s[pos:]
            if coface not in faces:
                continue
            val = c if _coface_sign(pos) > 0 else field.neg(c)
            prev = out.get(coface)
            out[coface] = val if prev is None else field.add(prev, val)
    out = {s: c for s, c in out.items() if not field.is_zero(c)}
    return SimplicialCochain(a.support, a.degree + 1, tuple(sorted(out.items())))


class CohomologySummand:
    """Exact reduced cohomology of one full subcomplex in one degree.

    Exposes the betti number, canonical cocycle representatives, the
    coboundary span, and coordinates of arbitrary cocycles in the quotient
    basis.  All of it is derived from reduced row echelon forms, hence
    deterministic.
    """

    def __init__(self, K: SimplicialComplex, J, p: int, field: Field):
        self.K = K
        self.J = K.normalize_subset(J)
        self.p = p
        self.field = field
        self.ops = ops = get_ops(field)
        self.simplices = K.faces_in(self.J, p)
        self.up_simplices = K.faces_in(self.J, p + 1)
        self._index = {s: i for i, s in enumerate(self.simplices)}
        n = len(self.simplices)
        one = field.one

        # d^p as rows indexed by (p+1)-simplices
        self.dmat = []
        for coface in self.up_simplices:
            items = []
            for i in range(len(coface)):
                face = coface[:i] + coface[i + 1 :]
                col = self._index.get(face)
                if col is not None:
                    items.append((col, one if _coface_sign(i) > 0 else field.neg(one)))
            self.dmat.append(ops.from_items(n, items))

        # image of d^(p-1) inside C^p
        down = K.faces_in(self.J, p - 1)
        cob_items: dict = {t: [] for t in down}
        for col, s in enumerate(self.simplices):
            for i in range(len(s)):
                face = s[:i] + s[i + 1 :]
                if face in cob_items:
                    cob_items[face].append((col, one if _coface_sign(i) > 0 else field.neg(one)))
        cob_rows = [ops.from_items(n, cob_items[t]) for t in down]
        self._cob_rows, self._cob_piv = ops.rref(cob_rows, n)

        kernel = ops.kernel_basis(self.dmat, n)
        reduced = [ops.reduce(self._cob_rows, self._cob_piv, z) for z in kernel]
        self._quot_rows, self._quot_piv = ops.rref(reduced, n)
        self.betti = len(self._quot_rows)

    def _unpack(self, row) -> SimplicialCochain:
        terms = {}
        for j, s in enumerate(self.simplices):
            c = self.ops.get(row, j)
            if not self.field.is_zero(c):
                terms[s] = c
        return SimplicialCochain(self.J, self.p, tuple(sorted(terms.items())))

    def _pack(self, a: SimplicialCochain):
        items = []
        for s, c in a.terms:
            col = self._index.get(s)
            if col is None:
                raise ValueError(f"simplex {s} is not a face of the subcomplex on {self.J}")
            items.append((col, c))
        return self.ops.from_items(len(self.simplices), items)

    @property
    def basis(self):
        """Canonical cocycle representatives of the quotient basis."""
        return [self._unpack(r) for r in self._quot_rows]

    @property
    def coboundary_basis(self):
        return [self._unpack(r) for r in self._cob_rows]

    @property
    def cocycle_space_dim(self) -> int:
        return self.betti + len(self._cob_rows)

    def is_coboundary(self, a: SimplicialCochain) -> bool:
        row = self._pack(a)
        return self.ops.is_zero_row(self.ops.reduce(self._cob_rows, self._cob_piv, row))

    def coords(self, a: SimplicialCochain):
        """Coordinates of the class of a cocycle in the quotient basis."""
        row = self.ops.reduce(self._cob_rows, self._cob_piv, self._pack(a))
        coeffs = tuple(self.ops.get(row, pc) for pc in self._quot_piv)
        if not self.ops.is_zero_row(self.ops.reduce(self._quot_rows, self._quot_piv, row)):
            raise ValueError(f"cochain on {self.J} in degree {self.p} is not a cocycle")
        return coeffs


def cohomology(K: SimplicialComplex, J, p: int, field: Field) -> CohomologySummand:
    """Summand H~^p(K_J); instances are cached on the complex."""
    if p < -1:
        raise ValueError(f"reduced cochain degree must be >= -1: got {p}")
    js = K.normalize_subset(J)
    key = ("summand", js, p, field.key)
    got = K._cache.get(key)
    if got is None:
        got = K._cache[key] = CohomologySummand(K, js, p, field)
    return got


def solve_coboundary(
    K: SimplicialComplex, field: Field, target: SimplicialCochain
) -> SimplicialCochain | None:
    """Canonical x with d(x) = target on the subcomplex, or None if no solution.

    The solution is the reduced-echelon particular solution with all free
    coordinates zero; a zero target always yields the zero cochain.
    """
    validate_cochain(K, field, target)
    p = target.degree - 1
    smd = cohomology(K, target.support, p, field)
    up_index = {s: i for i, s in enumerate(smd.up_simplices)}
    rhs = [field.zero] * len(smd.up_simplices)
    for s, c in target.terms:
        rhs[up_index[s]] = c
    sol = smd.ops.solve(smd.dmat, len(smd.simplices), rhs)
    if sol is None:
        return None
    return smd._unpack(sol)
