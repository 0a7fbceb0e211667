# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled row reduction kernels.

Contract matches zkmassey._core_py exactly (the reduced row echelon form is
unique, so the two backends agree bit for bit).  rref_gf2 requires ncols <= 64;
the dispatcher in zkmassey.linalg routes wider matrices to the pure backend.
"""

from libc.stdlib cimport free, malloc

__all__ = ["rref_gf2", "rref_mod"]


def rref_gf2(rows, int ncols):
    """Reduce GF(2) bitmask rows; returns (rref rows, pivot columns)."""
    cdef int n = len(rows)
    if n == 0:
        return [], []
    if ncols > 64:
        raise ValueError("compiled rref_gf2 supports at most 64 columns")
    cdef unsigned long long *work = <unsigned long long *> malloc(n * sizeof(unsigned long long))
    if work == NULL:
        raise MemoryError()
    cdef int i, c, r, piv
    cdef unsigned long long bit, prow, tmp
    try:
        for i in range(n):
            work[i] = rows[i]
        pivots = []
        r = 0
        for c in range(ncols):
            bit = (<unsigned long long> 1) << c
            piv = -1
            for i in range(r, n):
                if work[i] & bit:
                    piv = i
                    break
            if piv < 0:
                continue
            tmp = work[r]
            work[r] = work[piv]
            work[piv] = tmp
            prow = work[r]
            for i in range(n):
                if i != r and (work[i] & bit):
                    work[i] ^= prow
            pivots.append(c)
            r += 1
            if r == n:
                break
        out = [work[i] for i in range(r)]
        return out, pivots
    finally:
        free(work)


cdef long long _inv_mod(long long a, long long p):
    # extended Euclid; a != 0 mod p, p prime
    cdef long long t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_mod(rows, long long p):
    """Reduce rows of residues mod prime p; returns (rref rows, pivot columns)."""
    cdef int n = len(rows)
    if n == 0:
        return [], []
    cdef int ncols = len(rows[0])
    if ncols == 0:
        return [list(row) for row in rows][:0], []
    cdef long long *work = <long long *> malloc(n * ncols * sizeof(long long))
    if work == NULL:
        raise MemoryError()
    cdef int i, j, c, r, piv
    cdef long long lead, inv, f
    try:
        for i in range(n):
            row = rows[i]
            for j in range(ncols):
                work[i * ncols + j] = row[j]
        pivots = []
        r = 0
        for c in range(ncols):
            piv = -1
            for i in range(r, n):
                if work[i * ncols + c]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(ncols):
                    lead = work[r * ncols + j]
                    work[r * ncols + j] = work[piv * ncols + j]
                    work[piv * ncols + j] = lead
            lead = work[r * ncols + c]
            if lead != 1:
                inv = _inv_mod(lead, p)
                for j in range(c, ncols):
                    work[r * ncols + j] = work[r * ncols + j] * inv % p
            for i in range(n):
                if i != r:
                    f = work[i * ncols + c]
                    if f:
                        for j in range(c, ncols):
                            work[i * ncols + j] = (work[i * ncols + j] - f * work[r * ncols + j]) % p
                            if work[i * ncols + j] < 0:
                                work[i * ncols + j] += p
            pivots.append(c)
            r += 1
            if r == n:
                break
        out = [[work[i * ncols + j] for j in range(ncols)] for i in range(r)]
        return out, pivots
    finally:
        free(work)
