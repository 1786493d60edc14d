"""Type (A) / (A+) classification, gradings and the grading derivation."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Optional

from .exactlin import (
    Matrix,
    Subspace,
    charpoly,
    complement,
    det,
    identity,
    inverse,
    is_direct_sum,
    kernel,
    lincomb,
    matmul,
    solve,
    span,
    transpose,
)
from .kirillov import z_coefficient
from .liecore import (
    HeisenbergCert,
    LieAlgebra,
    LinearMap,
    bracket,
    brackets_into,
    center,
    center_of,
    centralizer,
    commute,
    heisenberg_in,
    is_subalgebra,
    nilpotency_step,
    second_center,
)


class TypeLabel(enum.Enum):
    HEISENBERG = "HEISENBERG"
    TYPE_A_PLUS = "TYPE_A_PLUS"
    TYPE_A_ONLY = "TYPE_A_ONLY"
    NOT_TYPE_A = "NOT_TYPE_A"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class TypeVerdict:
    label: TypeLabel
    reason: Optional[str] = None

    @property
    def is_type_a(self) -> bool:
        return self.label in (TypeLabel.HEISENBERG, TypeLabel.TYPE_A_PLUS, TypeLabel.TYPE_A_ONLY)


class GradingError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


def classify(g: LieAlgebra) -> TypeVerdict:
    if nilpotency_step(g) is None:
        return TypeVerdict(TypeLabel.NOT_APPLICABLE, "not nilpotent")
    Z = center(g)
    if Z.dim != 1:
        return TypeVerdict(TypeLabel.NOT_APPLICABLE, f"center not 1-dimensional (dim {Z.dim})")
    c2 = second_center(g)
    if c2 == g.whole:
        return TypeVerdict(TypeLabel.HEISENBERG)
    if not commute(g, c2, c2):
        return TypeVerdict(TypeLabel.NOT_TYPE_A)
    if centralizer(g, c2) == c2:
        return TypeVerdict(TypeLabel.TYPE_A_PLUS)
    return TypeVerdict(TypeLabel.TYPE_A_ONLY)


@dataclass(frozen=True)
class GradingAPlus:
    """``k = z + c + V`` with ``[c, c] = 0``, ``[V, V] in c``, ``[c, V] in z``.

    All subspaces are in the coordinates of the ambient algebra; ``k`` is their
    sum (the whole algebra, or a subalgebra of it).
    """

    z: Subspace
    c: Subspace
    V: Subspace
    pairing_gram: Matrix  # [c_i, v_j] = gram[i][j] * Z on the rref bases

    @property
    def k(self) -> Subspace:
        return self.z + self.c + self.V

    @property
    def zvec(self):
        return self.z.basis[0]

    def verify(self, g: LieAlgebra) -> None:
        k = self.k
        if not is_direct_sum(k, self.z, self.c, self.V):
            raise GradingError("z + c + V is not direct")
        if not is_subalgebra(g, k):
            raise GradingError("z + c + V is not a subalgebra")
        if self.z.dim != 1 or center_of(g, k) != self.z:
            raise GradingError("z is not the (1-dimensional) center of k")
        if not commute(g, self.c, self.c):
            raise GradingError("[c, c] != 0")
        if not brackets_into(g, self.V, self.V, self.c):
            raise GradingError("[V, V] not contained in c")
        if not brackets_into(g, self.c, self.V, self.z):
            raise GradingError("[c, V] not contained in z")
        if self.c.dim != self.V.dim:
            raise GradingError("c and V have different dimensions")
        gram = _gram(g, self.z, self.c, self.V)
        if gram != self.pairing_gram:
            raise GradingError("stored pairing gram is stale")
        if self.c.dim:
            try:
                inverse(g.field, gram)
            except ZeroDivisionError:
                raise GradingError("pairing c x V -> z is degenerate") from None

    def normalized_bases(self, g: LieAlgebra):
        """``(Z, c_list, v_list)`` with ``[c_i, v_j] = delta_ij Z``; ``v`` is the rref basis of V."""
        F, n = g.field, g.dim
        vs = self.V.basis
        if not vs:
            return self.zvec, (), ()
        m = inverse(F, self.pairing_gram)
        # c'_i = sum_a M[i][a] c_a with M gram = I
        cs = tuple(lincomb(F, m[i], self.c.basis, n) for i in range(len(vs)))
        return self.zvec, cs, vs


def _gram(g: LieAlgebra, z: Subspace, c: Subspace, V: Subspace) -> Matrix:
    return tuple(tuple(z_coefficient(z, bracket(g, ci, vj)) for vj in V.basis) for ci in c.basis)


def make_grading(g: LieAlgebra, z: Subspace, c: Subspace, V: Subspace) -> GradingAPlus:
    """Assemble and verify a grading from explicit subspaces."""
    for S in (c, V):
        for v in S.basis:
            if any(bracket(g, v, w) not in z for w in (c.basis if S is V else V.basis)):
                raise GradingError("[c, V] not contained in z")
    gr = GradingAPlus(z, c, V, _gram(g, z, c, V))
    gr.verify(g)
    return gr


def z_component(F, z: Subspace, c: Subspace, w):
    """Coefficient of the central vector when ``w`` is split along ``c + z``."""
    coeffs = solve(F, transpose(list(c.basis) + [z.basis[0]]), w)
    if coeffs is None:
        raise GradingError("vector is not in c + z (algebra not 3-step?)")
    return coeffs[-1]


def corrected_complement(g: LieAlgebra, z: Subspace, c: Subspace, V0: Subspace) -> Subspace:
    """Replace each ``v`` in ``V0`` by ``v - C_v / 2`` so that ``[V, V] in c``.

    ``C_v`` is the element of ``c`` whose bracket with ``V0`` reproduces the
    z-component of ``[v, V0]``; it exists because ``c x V0 -> z`` is a duality.
    """
    F, n = g.field, g.dim
    vs = V0.basis
    if not vs:
        return V0
    gram = _gram(g, z, c, V0)  # gram[a][b] = zeta([c_a, v_b])
    gt = transpose(gram)
    half = F(1) / F(2)
    out = []
    for v in vs:
        rhs = tuple(z_component(F, z, c, bracket(g, v, w)) for w in vs)
        coeffs = solve(F, gt, rhs)
        if coeffs is None:
            raise GradingError("pairing c x V is degenerate")
        cv = lincomb(F, coeffs, c.basis, n)
        out.append(tuple(a - half * b for a, b in zip(v, cv)))
    V = span(F, out, n)
    if not brackets_into(g, V, V, c):
        raise GradingError("corrected complement still has [V, V] outside c")
    return V


def construct_grading(k: LieAlgebra) -> GradingAPlus:
    verdict = classify(k)
    if verdict.label != TypeLabel.TYPE_A_PLUS:
        raise GradingError(f"algebra is {verdict.label.value}, a type (A+) grading needs TYPE_A_PLUS")
    z = center(k)
    c2 = second_center(k)
    c = complement(z, c2)
    V0 = complement(centralizer(k, c2), k.whole)
    V = corrected_complement(k, z, c, V0)
    gr = GradingAPlus(z, c, V, _gram(k, z, c, V))
    gr.verify(k)
    return gr


# -- derivations -----------------------------------------------------------


@dataclass(frozen=True)
class DerivationMatrix:
    map: LinearMap
    eigenvalues: dict  # {"z": 3, "c": 2, "V": 1}


def is_derivation(g: LieAlgebra, D: LinearMap) -> bool:
    for i in range(g.dim):
        for j in range(i):
            lhs = D(g.basis_bracket(i, j))
            rhs = tuple(
                a + b
                for a, b in zip(bracket(g, D(g.e(i)), g.e(j)), bracket(g, g.e(i), D(g.e(j))))
            )
            if lhs != rhs:
                return False
    return True


def grading_derivation(g: LieAlgebra, grading: GradingAPlus) -> DerivationMatrix:
    """``D = 3`` on z, ``2`` on c, ``1`` on V (a grading of the whole algebra)."""
    F, n = g.field, g.dim
    if grading.k != g.whole:
        raise GradingError("grading does not cover the whole algebra")
    rows = list(grading.z.basis) + list(grading.c.basis) + list(grading.V.basis)
    eig = [F(3)] * grading.z.dim + [F(2)] * grading.c.dim + [F(1)] * grading.V.dim
    P = transpose(rows)
    Pinv = inverse(F, P)
    diag = tuple(tuple(eig[i] if i == j else F.zero for j in range(n)) for i in range(n))
    D = LinearMap(F, n, n, matmul(matmul(P, diag), Pinv))
    if not is_derivation(g, D):
        raise AssertionError("grading derivation fails the Leibniz rule; grading is invalid")
    if not det(F, D.matrix):
        raise AssertionError("grading derivation is singular")
    return DerivationMatrix(D, {"z": 3, "c": 2, "V": 1})


def derivation_space(g: LieAlgebra) -> list[LinearMap]:
    """Basis of ``Der(g)``; unknown ``D[a][b]`` is flattened as ``a * n + b``."""
    F, n = g.field, g.dim
    N = n * n
    rows = []
    consts = g.structure_constants()

    def c(i, j, k):
        if i > j:
            return consts.get((i, j), {}).get(k, 0)
        if i < j:
            return -consts.get((j, i), {}).get(k, 0)
        return 0

    for i in range(n):
        for j in range(i):
            for k in range(n):
                row = [F.zero] * N
                # D[e_i, e_j]_k = sum_l c_ij^l D[k][l]
                for l in range(n):
                    a = c(i, j, l)
                    if a:
                        row[k * n + l] += a
                # - [D e_i, e_j]_k = - sum_a D[a][i] c_aj^k
                for a in range(n):
                    b = c(a, j, k)
                    if b:
                        row[a * n + i] -= b
                    b2 = c(i, a, k)
                    if b2:
                        row[a * n + j] -= b2
                if any(row):
                    rows.append(tuple(row))
    if not rows:
        ker = Subspace.full(F, N)
    else:
        ker = kernel(F, rows, N)
    out = []
    for v in ker.basis:
        out.append(LinearMap(F, n, n, tuple(tuple(v[a * n:(a + 1) * n]) for a in range(n))))
    return out


def has_invertible_derivation(g: LieAlgebra, trials: int = 12, seed: int = 0):
    """``(True, D)`` with a certified invertible derivation, or ``(False, None)``.

    Random combinations of a derivation basis are tried; a negative answer is
    probabilistic (Schwartz-Zippel) while a positive one carries its witness.
    """
    F, n = g.field, g.dim
    basis = derivation_space(g)
    if not basis:
        return (n == 0), None
    rng = random.Random(seed)
    bound = 10**6 if F.is_rational else F.prime - 1
    for _ in range(trials):
        coeffs = [F(rng.randint(-bound, bound)) for _ in basis]
        M = tuple(
            tuple(sum((cf * D.matrix[a][b] for cf, D in zip(coeffs, basis)), F.zero) for b in range(n))
            for a in range(n)
        )
        if det(F, M):
            D = LinearMap(F, n, n, M)
            assert is_derivation(g, D)
            return True, D
    return False, None


def derivation_charpoly(g: LieAlgebra, D: DerivationMatrix) -> tuple:
    return charpoly(g.field, D.map.matrix)


# -- Heisenberg complements and compatibility ------------------------------


def heisenberg_complement(d: Subspace, g: LieAlgebra):
    """``h = h0 + Z(g)`` with ``h0`` a complement of ``Z(d)`` in ``d``.

    Returns ``(h, cert)``; ``cert`` is a Heisenberg certificate when
    ``dim Z(g) = 1`` and ``None`` otherwise.
    """
    F = g.field
    Zg = center(g)
    if not is_subalgebra(g, d):
        raise PreconditionError("d is not a subalgebra")
    if not Zg <= d:
        raise PreconditionError("Z(g) is not contained in d")
    if not brackets_into(g, d, d, Zg):
        raise PreconditionError("[d, d] is not contained in Z(g)")
    if commute(g, d, d):
        raise PreconditionError("[d, d] = 0; there is no Heisenberg part to split off")
    Zd = center_of(g, d)
    h0 = complement(Zd, d)
    h = h0 + Zg
    if center_of(g, h) != Zg:
        raise AssertionError("Z(h) != Z(g)")
    if h + Zd != d or (h & Zd) != Zg:
        raise AssertionError("h does not complement Z(d) in d")
    cert = None
    if Zg.dim == 1:
        cert = heisenberg_in(g, h)
        if cert is None:
            raise AssertionError("h is not Heisenberg although dim Z(g) = 1")
    del F
    return h, cert


def check_compatible(a: Subspace, grading: GradingAPlus, g: LieAlgebra) -> bool:
    """``[a, V] in c`` and ``[a, z + c] = 0`` (requires ``[a, k] in k``)."""
    k = grading.k
    if not brackets_into(g, a, k, k):
        raise PreconditionError("[a, k] is not contained in k")
    return brackets_into(g, a, grading.V, grading.c) and commute(g, a, grading.z + grading.c)


def heisenberg_certificate(g: LieAlgebra, S: Subspace) -> Optional[HeisenbergCert]:
    return heisenberg_in(g, S)


def identity_map(g: LieAlgebra) -> LinearMap:
    return LinearMap(g.field, g.dim, g.dim, identity(g.field, g.dim))
