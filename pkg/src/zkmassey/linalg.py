"""Exact linear algebra over the coefficient fields.

Everything is built from the reduced row echelon form, which is unique for a
given matrix, so every derived object (kernel bases, particular solutions,
quotient bases) is deterministic and independent of the backend.

Row representation is chosen per field: GF(2) rows are int bitmasks, GF(p) and
rational rows are tuples of scalars.  The elimination inner loop for GF(2) and
GF(p) lives in a compiled kernel when available (``zkmassey._core``), with a
pure-Python fallback (``zkmassey._core_py``) selected at import time; set
ZKMASSEY_PURE=1 to force the fallback.
"""

from __future__ import annotations

import os

from . import _core_py
from .fields import Field, GF2Field, PrimeField, RationalField

if os.environ.get("ZKMASSEY_PURE"):
    _backend = _core_py
    BACKEND = "python"
else:
    try:
        from . import _core as _backend  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:  # pragma: no cover - build environment dependent
        _backend = _core_py
        BACKEND = "python"

__all__ = ["BACKEND", "get_ops", "SpanTracker"]


class GF2Ops:
    """Vector/matrix operations over GF(2); rows are int bitmasks."""

    def __init__(self, field):
        self.field = field

    def from_coeffs(self, coeffs):
        row = 0
        for j, c in enumerate(coeffs):
            if c & 1:
                row |= 1 << j
        return row

    def from_items(self, n, items):
        row = 0
        for j, c in items:
            if c & 1:
                row ^= 1 << j
        return row

    def to_coeffs(self, row, n):
        return tuple((row >> j) & 1 for j in range(n))

    def get(self, row, j):
        return (row >> j) & 1

    def is_zero_row(self, row):
        return row == 0

    def rref(self, rows, ncols):
        if BACKEND == "compiled" and ncols <= 64:
            return _backend.rref_gf2(list(rows), ncols)
        return _core_py.rref_gf2(list(rows), ncols)

    def reduce(self, rref_rows, pivots, row):
        for prow, c in zip(rref_rows, pivots):
            if (row >> c) & 1:
                row ^= prow
        return row

    def in_span(self, rref_rows, pivots, row):
        return self.reduce(rref_rows, pivots, row) == 0

    def kernel_basis(self, mat_rows, ncols):
        rows, pivots = self.rref(mat_rows, ncols)
        pivot_set = set(pivots)
        basis = []
        for f in range(ncols):
            if f in pivot_set:
                continue
            vec = 1 << f
            for prow, pc in zip(rows, pivots):
                if (prow >> f) & 1:
                    vec |= 1 << pc
            basis.append(vec)
        return basis

    def solve(self, mat_rows, ncols, rhs):
        aug = []
        hi = 1 << ncols
        for row, b in zip(mat_rows, rhs):
            aug.append(row | hi if b & 1 else row)
        rows, pivots = self.rref(aug, ncols + 1)
        if pivots and pivots[-1] == ncols:
            return None
        vec = 0
        for prow, pc in zip(rows, pivots):
            if prow >> ncols:
                vec |= 1 << pc
        return vec

    def scale_row(self, row, c):
        return row if c & 1 else 0

    def sub_scaled(self, u, v, c):
        return u ^ v if c & 1 else u


class DenseOps:
    """Generic dense operations; rows are tuples of field scalars."""

    def __init__(self, field):
        self.field = field

    def from_coeffs(self, coeffs):
        return tuple(coeffs)

    def from_items(self, n, items):
        row = [self.field.zero] * n
        for j, c in items:
            row[j] = self.field.add(row[j], c)
        return tuple(row)

    def to_coeffs(self, row, n):
        return tuple(row)

    def get(self, row, j):
        return row[j]

    def is_zero_row(self, row):
        zero = self.field.zero
        return all(c == zero for c in row)

    def rref(self, rows, ncols):
        f = self.field
        work = [list(r) for r in rows]
        n = len(work)
        pivots = []
        r = 0
        for c in range(ncols):
            piv = -1
            for i in range(r, n):
                if not f.is_zero(work[i][c]):
                    piv = i
                    break
            if piv < 0:
                continue
            work[r], work[piv] = work[piv], work[r]
            prow = work[r]
            lead = prow[c]
            if lead != f.one:
                inv = f.inv(lead)
                for j in range(c, ncols):
                    prow[j] = f.mul(prow[j], inv)
            for i in range(n):
                if i != r:
                    fac = work[i][c]
                    if not f.is_zero(fac):
                        row = work[i]
                        for j in range(c, ncols):
                            row[j] = f.sub(row[j], f.mul(fac, prow[j]))
            pivots.append(c)
            r += 1
            if r == n:
                break
        return [tuple(row) for row in work[:r]], pivots

    def reduce(self, rref_rows, pivots, row):
        f = self.field
        out = None
        for prow, c in zip(rref_rows, pivots):
            fac = row[c] if out is None else out[c]
            if not f.is_zero(fac):
                src = row if out is None else out
                out = [f.sub(a, f.mul(fac, b)) for a, b in zip(src, prow)]
        return row if out is None else tuple(out)

    def in_span(self, rref_rows, pivots, row):
        return self.is_zero_row(self.reduce(rref_rows, pivots, row))

    def kernel_basis(self, mat_rows, ncols):
        f = self.field
        rows, pivots = self.rref(mat_rows, ncols)
        pivot_set = set(pivots)
        basis = []
        for free in range(ncols):
            if free in pivot_set:
                continue
            vec = [f.zero] * ncols
            vec[free] = f.one
            for prow, pc in zip(rows, pivots):
                vec[pc] = f.neg(prow[free])
            basis.append(tuple(vec))
        return basis

    def solve(self, mat_rows, ncols, rhs):
        f = self.field
        aug = [tuple(row) + (b,) for row, b in zip(mat_rows, rhs)]
        rows, pivots = self.rref(aug, ncols + 1)
        if pivots and pivots[-1] == ncols:
            return None
        vec = [f.zero] * ncols
        for prow, pc in zip(rows, pivots):
            vec[pc] = prow[ncols]
        return tuple(vec)

    def scale_row(self, row, c):
        f = self.field
        return tuple(f.mul(c, a) for a in row)

    def sub_scaled(self, u, v, c):
        f = self.field
        return tuple(f.sub(a, f.mul(c, b)) for a, b in zip(u, v))


class ModOps(DenseOps):
    """GF(p) specialisation of DenseOps with inline modular arithmetic."""

    def __init__(self, field):
        super().__init__(field)
        self.p = field.p

    def rref(self, rows, ncols):
        reduced, pivots = _backend.rref_mod([list(r) for r in rows], self.p)
        return [tuple(r) for r in reduced], pivots

    def reduce(self, rref_rows, pivots, row):
        p = self.p
        out = None
        for prow, c in zip(rref_rows, pivots):
            fac = row[c] if out is None else out[c]
            if fac:
                src = row if out is None else out
                out = [(a - fac * b) % p for a, b in zip(src, prow)]
        return row if out is None else tuple(out)

    def is_zero_row(self, row):
        return not any(row)


_ops_cache: dict = {}


def get_ops(field: Field):
    """Operations object for a field (cached singletons)."""
    ops = _ops_cache.get(field.key)
    if ops is None:
        if isinstance(field, GF2Field):
            ops = GF2Ops(field)
        elif isinstance(field, PrimeField):
            ops = ModOps(field)
        elif isinstance(field, RationalField):
            ops = DenseOps(field)
        else:
            raise TypeError(f"unsupported field {field!r}")
        _ops_cache[field.key] = ops
    return ops


class SpanTracker:
    """Incremental row span with membership tests.

    Rows are kept in echelon form sorted by pivot column, each normalised to a
    leading 1, so ``add`` order determines which input rows are retained but
    not the span itself.
    """

    def __init__(self, ops, ncols: int):
        self.ops = ops
        self.ncols = ncols
        self.rows = []  # (pivot_col, row)

    def _reduce(self, row):
        ops, f = self.ops, self.ops.field
        for pc, prow in self.rows:
            fac = ops.get(row, pc)
            if not f.is_zero(fac):
                row = ops.sub_scaled(row, prow, fac)
        return row

    def add(self, row) -> bool:
        """Absorb a row; True if it enlarged the span."""
        ops, f = self.ops, self.ops.field
        row = self._reduce(row)
        if ops.is_zero_row(row):
            return False
        pc = next(j for j in range(self.ncols) if not f.is_zero(ops.get(row, j)))
        lead = ops.get(row, pc)
        if lead != f.one:
            row = ops.scale_row(row, f.inv(lead))
        self.rows.append((pc, row))
        self.rows.sort(key=lambda t: t[0])
        return True

    def contains(self, row) -> bool:
        return self.ops.is_zero_row(self._reduce(row))

    @property
    def rank(self) -> int:
        return len(self.rows)
