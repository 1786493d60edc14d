"""Pure-Python row reduction kernels.

Both kernels reduce a list of rows *in place* to reduced row-echelon form and
return the pivot columns.  Zero rows are dropped from the list.
"""

from __future__ import annotations


def rref_mod_p(rows: list[list[int]], ncols: int, p: int) -> list[int]:
    for row in rows:
        for c in range(ncols):
            row[c] %= p
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = pow(prow[c], p - 2, p)
        if inv != 1:
            for k in range(c, ncols):
                prow[k] = prow[k] * inv % p
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                for k in range(c, ncols):
                    row[k] = (row[k] - f * prow[k]) % p
        pivots.append(c)
        r += 1
    del rows[r:]
    return pivots


def rref_generic(rows: list[list], ncols: int) -> list[int]:
    """Field-agnostic elimination; entries only need ``+ - * /`` and truthiness."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        lead = prow[c]
        if lead != 1:
            for k in range(c, ncols):
                prow[k] = prow[k] / lead
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                for k in range(c, ncols):
                    if prow[k]:
                        row[k] = row[k] - f * prow[k]
        pivots.append(c)
        r += 1
    del rows[r:]
    return pivots
