"""Lie algebras given by structure constants.

Basis indices are 0-based internally; labels carry the human names
(``X1`` ... ``Xn`` for the catalog).  Only pairs ``(i, j)`` with ``i > j`` are
stored; the rest follows from antisymmetry.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Optional, Sequence

from .exactlin import (
    FieldSpec,
    Matrix,
    QQ,
    Subspace,
    Vector,
    complement,
    identity,
    inverse,
    is_zero,
    kernel,
    matvec,
    rank,
    span,
    transpose,
    unit_vector,
    zero_vector,
)


class StructureError(ValueError):
    """Malformed structure constants (bad index, (i, i) entry, duplicate key)."""


class NotAnIdealError(ValueError):
    pass


@dataclass(frozen=True)
class LieAlgebra:
    name: str
    field: FieldSpec
    dim: int
    labels: tuple
    # ((i, j), ((k, c), ...)) with i > j, nonzero c, sorted
    brackets: tuple

    @classmethod
    def from_brackets(
        cls,
        name: str,
        dim: int,
        table: Mapping,
        field: FieldSpec = QQ,
        labels: Optional[Sequence[str]] = None,
        one_based: bool = True,
    ) -> "LieAlgebra":
        """Build from ``{(i, j): {k: c}}`` (or ``[(k, c), ...]``) entries.

        Pairs with ``i < j`` are flipped with a sign change; ``(i, i)`` and a
        pair given in both orders are rejected.
        """
        off = 1 if one_based else 0
        if labels is None:
            labels = tuple(f"X{k + 1}" for k in range(dim))
        labels = tuple(labels)
        if len(labels) != dim:
            raise StructureError(f"{len(labels)} labels for dimension {dim}")
        if len(set(labels)) != dim:
            raise StructureError("basis labels must be distinct")
        seen = {}
        for (i, j), terms in table.items():
            i, j = i - off, j - off
            if not (0 <= i < dim and 0 <= j < dim):
                raise StructureError(f"bracket index out of range: ({i + off}, {j + off})")
            if i == j:
                raise StructureError(f"bracket of X{i + off} with itself may not be stored")
            sign = 1
            if i < j:
                i, j, sign = j, i, -1
            if (i, j) in seen:
                raise StructureError(f"duplicate bracket entry for ({i + off}, {j + off})")
            items = terms.items() if isinstance(terms, Mapping) else terms
            coeffs = {}
            for k, c in items:
                k -= off
                if not 0 <= k < dim:
                    raise StructureError(f"bracket term index out of range: {k + off}")
                c = field(c) * sign
                if k in coeffs:
                    c = coeffs[k] + c
                coeffs[k] = c
            seen[(i, j)] = tuple((k, c) for k, c in sorted(coeffs.items()) if c)
        entries = tuple(sorted(((ij, t) for ij, t in seen.items() if t), reverse=True))
        return cls(name, field, dim, labels, entries)

    @classmethod
    def from_vectors(
        cls, name: str, field: FieldSpec, labels: Sequence[str], table: Mapping
    ) -> "LieAlgebra":
        """Build from ``{(i, j): vector}`` with 0-based ``i > j``."""
        dim = len(labels)
        entries = {}
        for (i, j), vec in table.items():
            terms = [(k, c) for k, c in enumerate(vec) if c]
            if terms:
                entries[(i, j)] = terms
        return cls.from_brackets(name, dim, entries, field, labels, one_based=False)

    def with_name(self, name: str) -> "LieAlgebra":
        return LieAlgebra(name, self.field, self.dim, self.labels, self.brackets)

    # -- evaluation --------------------------------------------------------

    @cached_property
    def _table(self) -> dict:
        F, n = self.field, self.dim
        out = {}
        for (i, j), terms in self.brackets:
            v = list(zero_vector(F, n))
            for k, c in terms:
                v[k] = c
            out[(i, j)] = tuple(v)
        return out

    @cached_property
    def _terms(self) -> dict:
        return dict(self.brackets)

    @cached_property
    def _ad_basis(self) -> tuple:
        n = self.dim
        return tuple(transpose([self.basis_bracket(i, l) for l in range(n)]) for i in range(n))

    def basis_bracket(self, i: int, j: int) -> Vector:
        """``[e_i, e_j]`` for 0-based indices."""
        if i > j:
            v = self._table.get((i, j))
            return v if v is not None else zero_vector(self.field, self.dim)
        if i < j:
            v = self._table.get((j, i))
            return tuple(-x for x in v) if v is not None else zero_vector(self.field, self.dim)
        return zero_vector(self.field, self.dim)

    def e(self, i: int) -> Vector:
        return unit_vector(self.field, self.dim, i)

    def vec(self, *terms) -> Vector:
        """Vector from ``(coefficient, label)`` pairs or bare labels."""
        out = list(zero_vector(self.field, self.dim))
        for t in terms:
            c, lab = (1, t) if isinstance(t, str) else t
            out[self.labels.index(lab)] += self.field(c)
        return tuple(out)

    def span_of(self, *labels: str) -> Subspace:
        return span(self.field, [self.vec(lab) for lab in labels], self.dim)

    @property
    def whole(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    @property
    def zero_subspace(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def structure_constants(self) -> dict:
        """``{(i, j): {k: c}}`` with 0-based ``i > j``, nonzero entries only."""
        return {ij: dict(t) for ij, t in self.brackets}


def bracket(g: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    if len(x) != g.dim or len(y) != g.dim:
        raise ValueError(f"bracket arguments must have length {g.dim}")
    out = list(zero_vector(g.field, g.dim))
    table = g._terms
    ys = [(j, b) for j, b in enumerate(y) if b]
    for i, a in enumerate(x):
        if not a:
            continue
        for j, b in ys:
            if i > j:
                terms = table.get((i, j))
                if terms:
                    c = a * b
                    for k, s in terms:
                        out[k] += c * s
            elif i < j:
                terms = table.get((j, i))
                if terms:
                    c = a * b
                    for k, s in terms:
                        out[k] -= c * s
    return tuple(out)


def ad(g: LieAlgebra, x: Sequence) -> Matrix:
    """Matrix of ``y -> [x, y]`` acting on column vectors."""
    if len(x) != g.dim:
        raise ValueError(f"ad argument must have length {g.dim}")
    terms = [(a, g._ad_basis[i]) for i, a in enumerate(x) if a]
    if not terms:
        return tuple(zero_vector(g.field, g.dim) for _ in range(g.dim))
    if len(terms) == 1 and terms[0][0] == 1:
        return terms[0][1]
    out = [[g.field.zero] * g.dim for _ in range(g.dim)]
    for a, m in terms:
        for r, row in zip(out, m):
            for l, c in enumerate(row):
                if c:
                    r[l] += a * c
    return tuple(tuple(r) for r in out)


def bracket_space(g: LieAlgebra, U: Subspace, W: Subspace) -> Subspace:
    """The span of ``[U, W]``."""
    vecs = [bracket(g, u, w) for u in U.basis for w in W.basis]
    return span(g.field, vecs, g.dim)


def brackets_into(g: LieAlgebra, U: Subspace, W: Subspace, target: Subspace) -> bool:
    """``[U, W]`` contained in ``target``."""
    return all(bracket(g, u, w) in target for u in U.basis for w in W.basis)


def is_subalgebra(g: LieAlgebra, S: Subspace) -> bool:
    return brackets_into(g, S, S, S)


def is_ideal(g: LieAlgebra, S: Subspace) -> bool:
    return brackets_into(g, g.whole, S, S)


def commute(g: LieAlgebra, U: Subspace, W: Subspace) -> bool:
    return brackets_into(g, U, W, g.zero_subspace)


# -- validation ------------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    triple: Optional[tuple] = None  # 1-based (i, j, k) with i < j < k
    message: str = ""

    def __bool__(self):
        return self.ok


def validate(g: LieAlgebra) -> ValidationReport:
    """Check storage discipline and the Jacobi identity on basis triples."""
    seen = set()
    for (i, j), terms in g.brackets:
        if not (0 <= j < i < g.dim):
            return ValidationReport(False, None, f"stored pair ({i + 1}, {j + 1}) violates i > j")
        if (i, j) in seen:
            return ValidationReport(False, None, f"duplicate pair ({i + 1}, {j + 1})")
        seen.add((i, j))
        for k, c in terms:
            if not 0 <= k < g.dim:
                return ValidationReport(False, None, f"term index {k + 1} out of range")
    n = g.dim
    for i in range(n):
        for j in range(i + 1, n):
            xy = g.basis_bracket(i, j)
            for k in range(j + 1, n):
                a = bracket(g, xy, g.e(k))
                b = bracket(g, g.basis_bracket(j, k), g.e(i))
                c = bracket(g, g.basis_bracket(k, i), g.e(j))
                if any(x + y + z for x, y, z in zip(a, b, c)):
                    return ValidationReport(
                        False,
                        (i + 1, j + 1, k + 1),
                        f"Jacobi identity fails on ({g.labels[i]}, {g.labels[j]}, {g.labels[k]})",
                    )
    return ValidationReport(True)


# -- characteristic subspaces ---------------------------------------------


def centralizer(g: LieAlgebra, S: Subspace) -> Subspace:
    """``C(S:g) = {X : [s, X] = 0 for all s in S}``."""
    if S.ambient_dim != g.dim:
        raise ValueError("subspace does not live in the algebra")
    rows = []
    for s in S.basis:
        rows.extend(ad(g, s))
    if not rows:
        return g.whole
    return kernel(g.field, rows, g.dim)


def center(g: LieAlgebra) -> Subspace:
    return centralizer(g, g.whole)


def _preimage_under_all_ad(g: LieAlgebra, target: Subspace) -> Subspace:
    """``{X : [g, X] contained in target}``."""
    ann = target.annihilator()
    if not ann:
        return g.whole
    rows = []
    for i in range(g.dim):
        a = ad(g, g.e(i))
        for y in ann:
            # row y^T ad_i
            rows.append(tuple(sum((y[k] * a[k][l] for k in range(g.dim) if y[k]), g.field.zero)
                              for l in range(g.dim)))
    return kernel(g.field, rows, g.dim)


def second_center(g: LieAlgebra) -> Subspace:
    """``C_2 g = {X : [g, [g, X]] = 0}``."""
    return _preimage_under_all_ad(g, center(g))


def center_of(g: LieAlgebra, S: Subspace) -> Subspace:
    """Center of the subalgebra ``S``."""
    return S & centralizer(g, S)


def second_center_of(g: LieAlgebra, S: Subspace) -> Subspace:
    """``C_2`` of the subalgebra ``S`` in ambient coordinates."""
    h, emb = subalgebra(g, S)
    return emb.image(second_center(h))


def lower_central_series(g: LieAlgebra) -> list[Subspace]:
    """``g^1 = g, g^(k+1) = [g, g^k]`` until it stabilizes (last term repeated once)."""
    terms = [g.whole]
    while True:
        nxt = bracket_space(g, g.whole, terms[-1])
        terms.append(nxt)
        if nxt == terms[-2]:
            terms.pop()
            break
        if nxt.is_zero():
            break
    return terms


def derived_subalgebra(g: LieAlgebra) -> Subspace:
    return bracket_space(g, g.whole, g.whole)


def derived_series(g: LieAlgebra) -> list[Subspace]:
    terms = [g.whole]
    while True:
        nxt = bracket_space(g, terms[-1], terms[-1])
        if nxt == terms[-1]:
            break
        terms.append(nxt)
        if nxt.is_zero():
            break
    return terms


def upper_central_series(g: LieAlgebra) -> list[Subspace]:
    """``0 = Z_0, Z_1 = Z(g), ...`` until it stabilizes."""
    terms = [g.zero_subspace]
    while True:
        nxt = _preimage_under_all_ad(g, terms[-1])
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return terms


def nilpotency_step(g: LieAlgebra) -> Optional[int]:
    """Smallest ``s`` with ``g^(s+1) = 0``; ``None`` when not nilpotent.

    The zero algebra has step 0 and a nonzero abelian algebra has step 1.
    """
    lcs = lower_central_series(g)
    if not lcs[-1].is_zero():
        return None
    return len(lcs) - 1


def is_nilpotent(g: LieAlgebra) -> bool:
    return nilpotency_step(g) is not None


# -- linear maps, subalgebras, quotients ------------------------------------


@dataclass(frozen=True)
class LinearMap:
    """``matrix`` acts on column vectors: target_dim rows, source_dim columns."""

    field: FieldSpec
    source_dim: int
    target_dim: int
    matrix: Matrix

    def __post_init__(self):
        if len(self.matrix) != self.target_dim or any(len(r) != self.source_dim for r in self.matrix):
            raise ValueError("matrix shape does not match the declared dimensions")

    @classmethod
    def from_columns(cls, F: FieldSpec, source_dim: int, target_dim: int, columns) -> "LinearMap":
        columns = list(columns)
        if not columns:
            return cls(F, 0, target_dim, tuple(() for _ in range(target_dim)))
        return cls(F, source_dim, target_dim, tuple(zip(*columns)))

    @classmethod
    def identity(cls, F: FieldSpec, n: int) -> "LinearMap":
        return cls(F, n, n, identity(F, n))

    def __call__(self, v: Sequence) -> Vector:
        if not self.matrix:
            return ()
        return matvec(self.matrix, v)

    def image(self, S: Subspace) -> Subspace:
        return span(self.field, [self(v) for v in S.basis], self.target_dim)

    @property
    def rank(self) -> int:
        if not self.matrix or not self.source_dim:
            return 0
        return rank(self.field, self.matrix, self.source_dim)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """``self`` after ``other``."""
        cols = [self(c) for c in transpose(other.matrix, other.source_dim)] if other.matrix else []
        return LinearMap.from_columns(self.field, other.source_dim, self.target_dim, cols)


def _label_for(g: LieAlgebra, v: Sequence) -> str:
    nz = [(k, c) for k, c in enumerate(v) if c]
    if len(nz) == 1 and nz[0][1] == 1:
        return g.labels[nz[0][0]]
    parts = []
    for k, c in nz:
        s = g.field.format(c)
        parts.append(g.labels[k] if s == "1" else f"{s}*{g.labels[k]}")
    return "(" + "+".join(parts) + ")"


def change_basis(g: LieAlgebra, rows: Sequence[Sequence], name: Optional[str] = None,
                 labels: Optional[Sequence[str]] = None) -> LieAlgebra:
    """Structure constants of ``g`` in the basis given by ``rows`` (must be a basis)."""
    F, n = g.field, g.dim
    rows = [tuple(r) for r in rows]
    if len(rows) != n:
        raise ValueError("need exactly dim vectors")
    coords = inverse(F, transpose(rows))  # coordinates of x in new basis = coords @ x
    table = {}
    for i in range(n):
        for j in range(i):
            v = bracket(g, rows[i], rows[j])
            if not is_zero(v):
                table[(i, j)] = matvec(coords, v)
    if labels is None:
        labels = [_label_for(g, r) for r in rows]
        if len(set(labels)) != n:
            labels = [f"B{k + 1}" for k in range(n)]
    return LieAlgebra.from_vectors(name or g.name, F, labels, table)


def subalgebra(g: LieAlgebra, S: Subspace, name: Optional[str] = None):
    """``(h, embedding)``: ``S`` as an algebra on its rref basis, labels inherited."""
    if not is_subalgebra(g, S):
        raise ValueError("subspace is not closed under the bracket")
    F = g.field
    basis = S.basis
    table = {}
    for i in range(len(basis)):
        for j in range(i):
            v = bracket(g, basis[i], basis[j])
            if not is_zero(v):
                table[(i, j)] = S.coordinates(v)
    labels = [_label_for(g, b) for b in basis]
    h = LieAlgebra.from_vectors(name or f"{g.name}|sub", F, labels, table)
    emb = LinearMap.from_columns(F, len(basis), g.dim, basis)
    return h, emb


def quotient(g: LieAlgebra, ideal: Subspace, name: Optional[str] = None):
    """``(g / ideal, projection)`` on the coordinates of ``complement(ideal, g)``."""
    if not is_ideal(g, ideal):
        raise NotAnIdealError("subspace is not an ideal")
    F, n = g.field, g.dim
    comp = complement(ideal, g.whole)
    m = comp.dim
    full = list(comp.basis) + list(ideal.basis)
    coords = inverse(F, transpose(full))
    proj_rows = coords[:m]
    table = {}
    for i in range(m):
        for j in range(i):
            v = bracket(g, comp.basis[i], comp.basis[j])
            w = matvec(proj_rows, v)
            if not is_zero(w):
                table[(i, j)] = w
    labels = [_label_for(g, b) for b in comp.basis]
    q = LieAlgebra.from_vectors(name or f"{g.name}/I", F, labels, table)
    proj = LinearMap(F, n, m, tuple(proj_rows) if m else ())
    return q, proj


class HomCheck(enum.Enum):
    NOT_HOM = "not_hom"
    HOM = "hom"
    ISO = "iso"


def verify_homomorphism(f: LinearMap, g1: LieAlgebra, g2: LieAlgebra) -> HomCheck:
    if f.source_dim != g1.dim or f.target_dim != g2.dim:
        raise ValueError("map dimensions do not match the algebras")
    images = [f(g1.e(i)) if g1.dim else () for i in range(g1.dim)]
    for i in range(g1.dim):
        for j in range(i):
            lhs = f(g1.basis_bracket(i, j))
            rhs = bracket(g2, images[i], images[j])
            if tuple(lhs) != tuple(rhs):
                return HomCheck.NOT_HOM
    if g1.dim == g2.dim and f.rank == g1.dim:
        return HomCheck.ISO
    return HomCheck.HOM


# -- fingerprints ----------------------------------------------------------


@dataclass(frozen=True)
class InvariantFingerprint:
    dim: int
    lcs_dims: tuple
    derived_dims: tuple
    ucs_dims: tuple
    second_center_dim: int
    centralizer_of_second_center_dim: int
    step: Optional[int]
    center_dim: int

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "lcs_dims": list(self.lcs_dims),
            "derived_dims": list(self.derived_dims),
            "ucs_dims": list(self.ucs_dims),
            "second_center_dim": self.second_center_dim,
            "centralizer_of_second_center_dim": self.centralizer_of_second_center_dim,
            "step": self.step,
            "center_dim": self.center_dim,
        }


def fingerprint(g: LieAlgebra) -> InvariantFingerprint:
    c2 = second_center(g)
    return InvariantFingerprint(
        dim=g.dim,
        lcs_dims=tuple(s.dim for s in lower_central_series(g)),
        derived_dims=tuple(s.dim for s in derived_series(g)),
        ucs_dims=tuple(s.dim for s in upper_central_series(g)),
        second_center_dim=c2.dim,
        centralizer_of_second_center_dim=centralizer(g, c2).dim,
        step=nilpotency_step(g),
        center_dim=center(g).dim,
    )


# -- Heisenberg recognition ------------------------------------------------


@dataclass(frozen=True)
class HeisenbergCert:
    """Basis with ``[P_i, Q_j] = delta_ij Z`` and all other brackets zero."""

    z: Vector
    P: tuple
    Q: tuple

    @property
    def m(self) -> int:
        return len(self.P)

    def verify(self, g: LieAlgebra) -> bool:
        zero = zero_vector(g.field, g.dim)
        vecs = list(self.P) + list(self.Q) + [self.z]
        if span(g.field, vecs, g.dim).dim != len(vecs):
            return False
        for v in vecs:
            if bracket(g, self.z, v) != zero:
                return False
        m = self.m
        for a in range(m):
            for b in range(m):
                want = self.z if a == b else zero
                if bracket(g, self.P[a], self.Q[b]) != want:
                    return False
                if bracket(g, self.P[a], self.P[b]) != zero or bracket(g, self.Q[a], self.Q[b]) != zero:
                    return False
        return True

    def mapped(self, f: LinearMap) -> "HeisenbergCert":
        return HeisenbergCert(f(self.z), tuple(f(p) for p in self.P), tuple(f(q) for q in self.Q))


def is_heisenberg(g: LieAlgebra) -> Optional[HeisenbergCert]:
    """Certificate when ``g`` is 2-step nilpotent with 1-dimensional center."""
    if g.dim % 2 == 0:
        return None
    Z = center(g)
    if Z.dim != 1 or nilpotency_step(g) != 2:
        return None
    z = Z.basis[0]
    piv = Z.pivots[0]

    def form(x, y):
        v = bracket(g, x, y)
        return v[piv]  # [g, g] is inside Z and z has a 1 at its pivot

    pool = list(complement(Z, g.whole).basis)
    P, Q = [], []
    while pool:
        p = pool.pop(0)
        partner = next((k for k, y in enumerate(pool) if form(p, y)), None)
        if partner is None:
            return None  # degenerate form: center would be larger
        q = pool.pop(partner)
        q = tuple(x / form(p, q) for x in q)
        P.append(p)
        Q.append(q)
        new_pool = []
        for x in pool:
            a, b = form(x, q), form(x, p)
            new_pool.append(tuple(xi - a * pi + b * qi for xi, pi, qi in zip(x, p, q)))
        pool = new_pool
    cert = HeisenbergCert(z, tuple(P), tuple(Q))
    if not cert.verify(g):
        raise AssertionError("symplectic reduction produced an invalid Heisenberg basis")
    return cert


def heisenberg_in(g: LieAlgebra, S: Subspace) -> Optional[HeisenbergCert]:
    """Heisenberg certificate for the subalgebra ``S``, in ``g``'s coordinates."""
    if not is_subalgebra(g, S):
        return None
    h, emb = subalgebra(g, S)
    cert = is_heisenberg(h)
    return cert.mapped(emb) if cert is not None else None
