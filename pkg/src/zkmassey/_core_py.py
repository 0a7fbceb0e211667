"""Pure-Python row reduction kernels.

Same contract as the compiled module ``zkmassey._core``: both produce the
reduced row echelon form, which is unique, so results are bit-identical across
backends.  GF(2) matrices travel as lists of int bitmasks (bit j = column j,
no width limit here); GF(p) matrices as lists of residue lists.
"""

from __future__ import annotations

__all__ = ["rref_gf2", "rref_mod"]


def rref_gf2(rows, ncols):
    """Reduce GF(2) bitmask rows; returns (rref rows, pivot columns)."""
    work = list(rows)
    n = len(work)
    pivots = []
    r = 0
    for c in range(ncols):
        bit = 1 << c
        piv = -1
        for i in range(r, n):
            if work[i] & bit:
                piv = i
                break
        if piv < 0:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        for i in range(n):
            if i != r and work[i] & bit:
                work[i] ^= prow
        pivots.append(c)
        r += 1
        if r == n:
            break
    return work[:r], pivots


def rref_mod(rows, p):
    """Reduce rows of residues mod prime p; returns (rref rows, pivot columns)."""
    work = [list(row) for row in rows]
    n = len(work)
    ncols = len(work[0]) if work else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = -1
        for i in range(r, n):
            if work[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        lead = prow[c]
        if lead != 1:
            inv = pow(lead, p - 2, p)
            for j in range(c, ncols):
                prow[j] = prow[j] * inv % p
        for i in range(n):
            if i != r:
                f = work[i][c]
                if f:
                    row = work[i]
                    for j in range(c, ncols):
                        row[j] = (row[j] - f * prow[j]) % p
        pivots.append(c)
        r += 1
        if r == n:
            break
    return work[:r], pivots
