"""One-dimensional central extensions and skew maps ``psi`` of 3-step algebras."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .exactlin import (
    FieldSpec,
    Matrix,
    Subspace,
    complement,
    det,
    inverse,
    is_zero,
    kernel,
    matvec,
    span,
    transpose,
)
from .liecore import (
    HomCheck,
    LieAlgebra,
    LinearMap,
    bracket,
    center,
    quotient,
    validate,
    verify_homomorphism,
)
from .typeclass import GradingAPlus, construct_grading


class CocycleError(ValueError):
    pass


class PsiError(ValueError):
    pass


# -- 2-cocycles -------------------------------------------------------------


def _form(omega: Matrix, u: Sequence, v: Sequence):
    n = len(u)
    acc = u[0] - u[0] if n else 0
    for i in range(n):
        if u[i]:
            for j in range(n):
                if v[j] and omega[i][j]:
                    acc += u[i] * omega[i][j] * v[j]
    return acc


@dataclass(frozen=True)
class Cocycle:
    g0: LieAlgebra
    omega: Matrix

    def __call__(self, u, v):
        return _form(self.omega, u, v)


@dataclass(frozen=True)
class CocycleReport:
    is_cocycle: bool
    radical: Subspace
    is_symplectic: bool
    center_ok: bool
    failing_triple: Optional[tuple] = None  # 1-based


def _as_matrix(F: FieldSpec, omega, n: int) -> Matrix:
    m = tuple(tuple(F(x) for x in row) for row in omega)
    if len(m) != n or any(len(r) != n for r in m):
        raise CocycleError(f"omega must be {n}x{n}")
    for i in range(n):
        for j in range(n):
            if m[i][j] != -m[j][i]:
                raise CocycleError(f"omega is not skew at ({i + 1},{j + 1})")
    return m


def validate_cocycle(g0: LieAlgebra, omega) -> CocycleReport:
    F, n = g0.field, g0.dim
    om = _as_matrix(F, omega, n)
    failing = None
    for i, j, k in itertools.combinations(range(n), 3):
        ei, ej, ek = g0.e(i), g0.e(j), g0.e(k)
        s = (_form(om, g0.basis_bracket(i, j), ek) + _form(om, g0.basis_bracket(j, k), ei)
             + _form(om, g0.basis_bracket(k, i), ej))
        if s:
            failing = (i + 1, j + 1, k + 1)
            break
    radical = kernel(F, om, n) if n else Subspace.zero(F, 0)
    return CocycleReport(
        failing is None,
        radical,
        radical.is_zero(),
        (center(g0) & radical).is_zero(),
        failing,
    )


def _fresh_label(labels: Sequence[str]) -> str:
    if "Z" not in labels:
        return "Z"
    k = 0
    while f"Z{k}" in labels:
        k += 1
    return f"Z{k}"


def central_extension(g0: LieAlgebra, omega, check: bool = True, name: Optional[str] = None) -> LieAlgebra:
    """``g0 + K`` with ``[(x, s), (y, t)] = ([x, y], omega(x, y))``; new vector last."""
    F, n = g0.field, g0.dim
    om = _as_matrix(F, omega, n)
    report = validate_cocycle(g0, om)
    if check and not report.is_cocycle:
        raise CocycleError(f"cocycle identity fails on basis triple {report.failing_triple}")
    table = {}
    for i in range(n):
        for j in range(i):
            v = g0.basis_bracket(i, j) + (om[i][j],)
            if not is_zero(v):
                table[(i, j)] = v
    labels = list(g0.labels) + [_fresh_label(g0.labels)]
    g = LieAlgebra.from_vectors(name or f"{g0.name}+w", F, labels, table)
    jac = validate(g)
    if jac.ok != report.is_cocycle:
        raise AssertionError("Jacobi identity and cocycle identity disagree")
    return g


@dataclass(frozen=True)
class ExtractedCocycle:
    g0: LieAlgebra
    omega: Matrix
    extension: LieAlgebra
    iso: LinearMap  # extension -> g


def extract_cocycle(g: LieAlgebra) -> ExtractedCocycle:
    """``g = g/Z(g)`` extended by ``omega``, with a verified isomorphism back to ``g``."""
    F, n = g.field, g.dim
    Z = center(g)
    if Z.dim != 1:
        raise CocycleError(f"center has dimension {Z.dim}, expected 1")
    g0, _ = quotient(g, Z, name=f"{g.name}/Z")
    comp = complement(Z, g.whole).basis
    zvec = Z.basis[0]
    zrow = inverse(F, transpose(list(comp) + [zvec]))[-1]
    m = n - 1
    omega = tuple(
        tuple(sum((a * b for a, b in zip(zrow, bracket(g, comp[i], comp[j]))), F.zero) for j in range(m))
        for i in range(m)
    )
    ext = central_extension(g0, omega, name=g.name)
    iso = LinearMap.from_columns(F, n, n, list(comp) + [zvec])
    if verify_homomorphism(iso, ext, g) is not HomCheck.ISO:
        raise AssertionError("extension is not isomorphic to the original algebra")
    return ExtractedCocycle(g0, omega, ext, iso)


# -- skew maps psi ----------------------------------------------------------


@dataclass(frozen=True)
class PsiMap:
    """``psi(e_i, e_j) = sum_k tensor[i][j][k] e_k``, skew in ``(i, j)``."""

    field: FieldSpec
    n: int
    tensor: tuple

    @classmethod
    def from_values(cls, F: FieldSpec, n: int, values: dict) -> "PsiMap":
        """``values[(i, j)]`` (0-based, ``i != j``) is the vector ``psi(e_i, e_j)``."""
        t = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
        for (i, j), vec in values.items():
            if i == j:
                if any(F(x) for x in vec):
                    raise PsiError("psi(e_i, e_i) must vanish")
                continue
            vec = [F(x) for x in vec]
            if len(vec) != n:
                raise PsiError(f"psi values must have length {n}")
            for k in range(n):
                t[i][j][k] = vec[k]
                t[j][i][k] = -vec[k]
        return cls(F, n, tuple(tuple(tuple(r) for r in row) for row in t))

    @classmethod
    def zero(cls, F: FieldSpec, n: int) -> "PsiMap":
        return cls.from_values(F, n, {})

    def __post_init__(self):
        n = self.n
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.tensor[i][j][k] != -self.tensor[j][i][k]:
                        raise PsiError("psi is not skew")

    def __call__(self, x: Sequence, y: Sequence) -> tuple:
        F, n = self.field, self.n
        out = [F.zero] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if y[j] and i != j:
                    c = x[i] * y[j]
                    for k, t in enumerate(self.tensor[i][j]):
                        if t:
                            out[k] += c * t
        return tuple(out)

    def key(self) -> tuple:
        """Canonical ordering key: upper-triangle entries as integers."""
        return tuple(
            _int(self.tensor[i][j][k]) for i in range(self.n) for j in range(i + 1, self.n) for k in range(self.n)
        )


def _int(x):
    return getattr(x, "v", x)


def psi_membership(psi: PsiMap) -> bool:
    t, n = psi.tensor, psi.n
    for i, j, k in itertools.combinations(range(n), 3):
        if t[i][j][k] + t[j][k][i] + t[k][i][j]:
            return False
    return True


def psi_to_algebra(psi: PsiMap, check: bool = True, name: Optional[str] = None) -> LieAlgebra:
    """Coordinates ``v_1..v_n, c_1..c_n, z``: ``[v_i, v_j] = psi_ij^k c_k``, ``[c_i, v_j] = delta_ij z``."""
    F, n = psi.field, psi.n
    member = psi_membership(psi)
    if check and not member:
        raise PsiError("psi does not satisfy the cyclic membership condition")
    dim = 2 * n + 1
    table = {}
    for i in range(n):
        for j in range(i):
            vec = [F.zero] * dim
            for k in range(n):
                vec[n + k] = psi.tensor[i][j][k]
            if any(vec):
                table[(i, j)] = tuple(vec)
        vec = [F.zero] * dim
        vec[2 * n] = F.one
        table[(n + i, i)] = tuple(vec)
    labels = [f"V{i + 1}" for i in range(n)] + [f"C{i + 1}" for i in range(n)] + ["Z"]
    g = LieAlgebra.from_vectors(name or f"psi{n}", F, labels, table)
    if validate(g).ok != member:
        raise AssertionError("Jacobi identity and membership condition disagree")
    return g


def psi_grading(n: int, F: FieldSpec) -> GradingAPlus:
    dim = 2 * n + 1

    def e(i):
        return tuple(F.one if k == i else F.zero for k in range(dim))

    z = span(F, [e(2 * n)], dim)
    c = span(F, [e(n + i) for i in range(n)], dim)
    V = span(F, [e(i) for i in range(n)], dim)
    gram = tuple(tuple(F.one if i == j else F.zero for j in range(n)) for i in range(n))
    return GradingAPlus(z, c, V, gram)


def psi_realization(k: LieAlgebra, grading: Optional[GradingAPlus] = None):
    """``(psi, iso)`` with ``iso: psi_to_algebra(psi) -> k`` verified."""
    F = k.field
    if grading is None:
        grading = construct_grading(k)
    else:
        grading.verify(k)
    if grading.k != k.whole:
        raise PsiError("grading does not cover the algebra")
    zvec, cs, vs = grading.normalized_bases(k)
    n = len(vs)
    to_cs = inverse(F, tuple(zip(*(grading.c.coordinates(x) for x in cs)))) if n else ()
    values = {}
    for i in range(n):
        for j in range(i):
            w = bracket(k, vs[i], vs[j])
            if w not in grading.c:
                raise PsiError("[V, V] is not contained in c")
            values[(i, j)] = matvec(to_cs, grading.c.coordinates(w))
    psi = PsiMap.from_values(F, n, values)
    alg = psi_to_algebra(psi)
    iso = LinearMap.from_columns(F, k.dim, k.dim, list(vs) + list(cs) + [zvec])
    if verify_homomorphism(iso, alg, k) is not HomCheck.ISO:
        raise AssertionError("psi algebra is not isomorphic to the input")
    return psi, iso


def algebra_to_psi(k: LieAlgebra, grading: Optional[GradingAPlus] = None) -> PsiMap:
    return psi_realization(k, grading)[0]


def _check_invertible(F: FieldSpec, gmat) -> Matrix:
    m = tuple(tuple(F(x) for x in row) for row in gmat)
    if not m or len(m) != len(m[0]) or not det(F, m):
        raise PsiError("matrix is not invertible")
    return m


def gl_action(gmat, psi: PsiMap) -> PsiMap:
    """``(g.psi)(x, y) = (g^T)^{-1} psi(g^{-1} x, g^{-1} y)``."""
    F, n = psi.field, psi.n
    g = _check_invertible(F, gmat)
    if len(g) != n:
        raise PsiError(f"matrix must be {n}x{n}")
    ginv = inverse(F, g)
    git = inverse(F, transpose(g))
    cols = transpose(ginv)  # cols[i] = g^{-1} e_i
    values = {}
    for i in range(n):
        for j in range(i):
            values[(i, j)] = matvec(git, psi(cols[i], cols[j]))
    out = PsiMap.from_values(F, n, values)
    if psi_membership(psi) and not psi_membership(out):
        raise AssertionError("GL action broke membership")
    return out


def gl_iso(gmat, psi: PsiMap) -> LinearMap:
    """Isomorphism ``psi_to_algebra(psi) -> psi_to_algebra(g.psi)``: ``v -> g v``, ``c -> g^{-T} c``."""
    F, n = psi.field, psi.n
    g = _check_invertible(F, gmat)
    git = inverse(F, transpose(g))
    dim = 2 * n + 1
    rows = [[F.zero] * dim for _ in range(dim)]
    for a in range(n):
        for b in range(n):
            rows[a][b] = g[a][b]
            rows[n + a][n + b] = git[a][b]
    rows[2 * n][2 * n] = F.one
    return LinearMap(F, dim, dim, tuple(tuple(r) for r in rows))


def _all_psi(F: FieldSpec, n: int):
    p = F.prime
    pairs = [(i, j) for i in range(n) for j in range(i)]
    for vals in itertools.product(range(p), repeat=len(pairs) * n):
        values = {pr: vals[t * n:(t + 1) * n] for t, pr in enumerate(pairs)}
        psi = PsiMap.from_values(F, n, values)
        if psi_membership(psi):
            yield psi


def _all_gl(F: FieldSpec, n: int):
    p = F.prime
    for vals in itertools.product(range(p), repeat=n * n):
        m = tuple(tuple(F(vals[i * n + j]) for j in range(n)) for i in range(n))
        if det(F, m):
            yield m


def enumerate_orbits(n: int, F: FieldSpec) -> list:
    """GL(n, F_p)-orbits on the admissible ``psi``; small cases only."""
    if F.is_rational or F.prime not in (3, 5):
        raise ValueError("orbit enumeration needs F_3 or F_5")
    if n > 2 or n < 1:
        raise ValueError("orbit enumeration is limited to n <= 2")
    group = list(_all_gl(F, n))
    seen = {}
    orbits = []
    for psi in _all_psi(F, n):
        if psi.key() in seen:
            continue
        orbit = {}
        for g in group:
            q = gl_action(g, psi)
            orbit[q.key()] = q
        idx = len(orbits)
        for key in orbit:
            seen[key] = idx
        orbits.append([orbit[key] for key in sorted(orbit)])
    orbits.sort(key=lambda o: (len(o), o[0].key()))
    return orbits
