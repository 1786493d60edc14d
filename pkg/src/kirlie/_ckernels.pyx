# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row reduction kernels (same contract as ``_pykernels``)."""

from libc.stdlib cimport malloc, free


def rref_mod_p(list rows, Py_ssize_t ncols, long long p):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t i, k, c, r = 0, piv
    cdef long long f, inv, v
    cdef long long *a
    cdef long long *prow
    cdef long long *row
    pivots = []
    if nrows == 0 or ncols == 0:
        del rows[:]
        return pivots
    a = <long long *> malloc(nrows * ncols * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    try:
        for i in range(nrows):
            src = rows[i]
            for k in range(ncols):
                v = (<long long> src[k]) % p
                if v < 0:
                    v += p
                a[i * ncols + k] = v
        for c in range(ncols):
            if r == nrows:
                break
            piv = -1
            for i in range(r, nrows):
                if a[i * ncols + c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for k in range(ncols):
                    v = a[r * ncols + k]
                    a[r * ncols + k] = a[piv * ncols + k]
                    a[piv * ncols + k] = v
            prow = a + r * ncols
            inv = _inverse(prow[c], p)
            if inv != 1:
                for k in range(c, ncols):
                    prow[k] = prow[k] * inv % p
            for i in range(nrows):
                if i == r:
                    continue
                row = a + i * ncols
                f = row[c]
                if f != 0:
                    for k in range(c, ncols):
                        v = (row[k] - f * prow[k]) % p
                        if v < 0:
                            v += p
                        row[k] = v
            pivots.append(c)
            r += 1
        del rows[r:]
        for i in range(r):
            rows[i] = [a[i * ncols + k] for k in range(ncols)]
    finally:
        free(a)
    return pivots


cdef long long _inverse(long long x, long long p):
    # extended Euclid; p is prime and x is a nonzero residue
    cdef long long t = 0, newt = 1, rr = p, newr = x, q, tmp
    while newr != 0:
        q = rr // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = rr - q * newr
        rr = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_generic(list rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t i, k, c, r = 0, piv
    cdef list prow, row
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if (<list> rows[i])[c]:
                piv = i
                break
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = <list> rows[r]
        lead = prow[c]
        if lead != 1:
            for k in range(c, ncols):
                prow[k] = prow[k] / lead
        for i in range(nrows):
            if i == r:
                continue
            row = <list> rows[i]
            f = row[c]
            if f:
                for k in range(c, ncols):
                    x = prow[k]
                    if x:
                        row[k] = row[k] - f * x
        pivots.append(c)
        r += 1
    del rows[r:]
    return pivots
