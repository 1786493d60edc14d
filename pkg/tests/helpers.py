"""Random algebras, automorphisms and cocycles shared by the test modules."""

import random

from hypothesis import strategies as st

from kirlie.exactlin import GF, QQ, identity, kernel
from kirlie.liecore import LieAlgebra, change_basis

FIELDS = [QQ, GF(3), GF(5), GF(7)]
fields = st.sampled_from(FIELDS)


def small(rng, F, lo=-3, hi=3):
    return F(rng.randint(lo, hi))


def random_unimodular(F, n, rng, steps=None):
    """Product of random elementary row operations (determinant 1)."""
    m = [list(r) for r in identity(F, n)]
    for _ in range(steps or 3 * n):
        a, b = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if a == b:
            continue
        c = F(rng.choice([-2, -1, 1, 2]))
        m[a] = [x + c * y for x, y in zip(m[a], m[b])]
    return tuple(tuple(r) for r in m)


def scramble(g, rng):
    """``g`` in a random unimodular basis; returns (algebra, rows)."""
    rows = random_unimodular(g.field, g.dim, rng)
    return change_basis(g, rows, name=f"{g.name}~", labels=[f"B{k + 1}" for k in range(g.dim)]), rows


def random_two_step(F, dim, rng):
    """Brackets of a ``u``-generator algebra land in a central block of size ``dim - u``."""
    u = rng.randint(2, dim - 1) if dim >= 3 else dim
    w = dim - u
    table = {}
    for i in range(w, dim):
        for j in range(w, i):
            vec = {k + 1: rng.randint(-2, 2) for k in range(w)}
            vec = {k: c for k, c in vec.items() if c}
            if vec:
                table[(i + 1, j + 1)] = vec
    return LieAlgebra.from_brackets(f"rand2_{dim}", dim, table, F)


def cocycle_space(g0):
    """Basis of skew forms satisfying the cyclic identity on ``g0``."""
    F, n = g0.field, g0.dim
    pairs = [(i, j) for i in range(n) for j in range(i)]
    idx = {p: t for t, p in enumerate(pairs)}

    def coeffs(u, k):
        # omega(u, e_k) as a linear form in the unknowns
        row = [F.zero] * len(pairs)
        for a, ua in enumerate(u):
            if not ua or a == k:
                continue
            if a > k:
                row[idx[(a, k)]] += ua
            else:
                row[idx[(k, a)]] -= ua
        return row

    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                r1 = coeffs(g0.basis_bracket(i, j), k)
                r2 = coeffs(g0.basis_bracket(j, k), i)
                r3 = coeffs(g0.basis_bracket(k, i), j)
                r = [a + b + c for a, b, c in zip(r1, r2, r3)]
                if any(r):
                    rows.append(r)
    if not pairs:
        return []
    if rows:
        sols = kernel(F, rows, len(pairs)).basis
    else:
        sols = [tuple(F.one if s == t else F.zero for s in range(len(pairs))) for t in range(len(pairs))]
    out = []
    for sol in sols:
        m = [[F.zero] * n for _ in range(n)]
        for (i, j), t in idx.items():
            m[i][j] = sol[t]
            m[j][i] = -sol[t]
        out.append(tuple(tuple(r) for r in m))
    return out


def random_combination(F, mats, n, rng):
    m = [[F.zero] * n for _ in range(n)]
    for basis_m in mats:
        c = small(rng, F)
        for i in range(n):
            for j in range(n):
                m[i][j] += c * basis_m[i][j]
    return tuple(tuple(r) for r in m)


def random_skew(F, n, rng):
    m = [[F.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i):
            c = small(rng, F)
            m[i][j], m[j][i] = c, -c
    return tuple(tuple(r) for r in m)


def rng_for(seed):
    return random.Random(seed)


# criterion number -> "PASS ..." / "FAIL ..." line, filled by test_acceptance
ACCEPTANCE = {}
