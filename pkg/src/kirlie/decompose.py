"""Reduced products and the two-stage splitting of algebras with 1-dimensional center."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .exactlin import Subspace, complement, inverse, is_direct_sum, kernel, span
from .liecore import (
    LieAlgebra,
    LinearMap,
    bracket,
    brackets_into,
    center,
    center_of,
    centralizer,
    change_basis,
    commute,
    heisenberg_in,
    is_ideal,
    is_subalgebra,
    nilpotency_step,
    quotient,
    second_center,
    second_center_of,
    subalgebra,
)
from .typeclass import (
    GradingAPlus,
    TypeLabel,
    _gram,
    check_compatible,
    classify,
    construct_grading,
    corrected_complement,
    heisenberg_complement,
    z_component,
)


class DecompositionError(ValueError):
    pass


class ProductKind(enum.Enum):
    DIRECT = "direct"
    SEMIDIRECT = "semidirect"
    NONE = "none"


def verify_reduced_product(g: LieAlgebra, g1: Subspace, g2: Subspace,
                           within: Optional[Subspace] = None) -> ProductKind:
    """Classify ``g1 + g2``; ``within`` replaces ``g`` by one of its subalgebras."""
    whole = g.whole if within is None else within
    for name, S in (("g1", g1), ("g2", g2)):
        if not is_subalgebra(g, S) or not S <= whole:
            raise DecompositionError(f"{name} is not a subalgebra")
    if g1 + g2 != whole or (g1 & g2) != center_of(g, whole):
        return ProductKind.NONE
    if not brackets_into(g, g2, g1, g1):
        return ProductKind.NONE
    return ProductKind.DIRECT if commute(g, g1, g2) else ProductKind.SEMIDIRECT


@dataclass(frozen=True)
class ReducedProductCert:
    g1: Subspace
    g2: Subspace
    kind: ProductKind
    within: Optional[Subspace] = None

    def verify(self, g: LieAlgebra) -> None:
        got = verify_reduced_product(g, self.g1, self.g2, self.within)
        if got is ProductKind.NONE:
            raise AssertionError("certificate does not describe a reduced product")
        if self.kind is ProductKind.DIRECT and got is not ProductKind.DIRECT:
            raise AssertionError("certificate claims a direct product but [g1, g2] != 0")

    def quotient_check(self, g: LieAlgebra) -> bool:
        """Images in ``g / Z(g)`` form an internal semidirect sum."""
        if self.within is not None:
            h, _ = subalgebra(g, self.within)
            return ReducedProductCert(
                _pullback(self.within, self.g1), _pullback(self.within, self.g2), self.kind
            ).quotient_check(h)
        q, proj = quotient(g, center(g))
        i1, i2 = proj.image(self.g1), proj.image(self.g2)
        return (i1 & i2).is_zero() and i1 + i2 == q.whole and brackets_into(q, i2, i1, i1)


def split_off_heisenberg(g: LieAlgebra) -> Optional[ReducedProductCert]:
    """``g = h x~ C(h:g)`` with ``h`` Heisenberg, or ``None`` when ``C_2 g`` is abelian."""
    Z = center(g)
    if Z.dim != 1:
        raise DecompositionError(f"center has dimension {Z.dim}, expected 1")
    if nilpotency_step(g) is None:
        raise DecompositionError("algebra is not nilpotent")
    c2 = second_center(g)
    if c2 == g.whole or commute(g, c2, c2):
        return None
    h, _ = heisenberg_complement(c2, g)
    factor = centralizer(g, h)
    cert = ReducedProductCert(h, factor, ProductKind.DIRECT)
    cert.verify(g)
    fc2 = second_center_of(g, factor)
    if not commute(g, fc2, fc2):
        raise AssertionError("C(h:g) is not of type (A)")
    if center_of(g, factor) != Z or (h & factor) != Z:
        raise AssertionError("h and C(h:g) do not meet in Z(g)")
    return cert


@dataclass(frozen=True)
class TypeASplit:
    cert: ReducedProductCert
    grading: GradingAPlus  # grading of g1


def split_type_a(k: LieAlgebra) -> Optional[TypeASplit]:
    """``k = g1 x|~ b1`` with ``g1 = C_2 k + V`` graded and ``b1`` 2-step."""
    label = classify(k).label
    if label in (TypeLabel.TYPE_A_PLUS, TypeLabel.HEISENBERG):
        return None
    if label is not TypeLabel.TYPE_A_ONLY:
        raise DecompositionError(f"algebra is {label.value}, expected TYPE_A_ONLY")
    step = nilpotency_step(k)
    if step != 3:
        raise DecompositionError(f"algebra is {step}-step nilpotent, expected 3-step")
    F, n = k.field, k.dim
    z = center(k)
    c2 = second_center(k)
    b = centralizer(k, c2)
    c = complement(z, c2)
    V = corrected_complement(k, z, c, complement(b, k.whole))
    g1 = c2 + V
    if not is_ideal(k, g1):
        raise AssertionError("C_2 k + V is not an ideal")
    # b1: kernel of X -> (zeta[X, v_j])_j on b
    vs = V.basis
    rows = [[z_component(F, z, c, bracket(k, x, v)) for x in b.basis] for v in vs]
    if rows:
        coeffs = kernel(F, rows, b.dim).basis
    else:
        coeffs = tuple(tuple(F.one if i == j else F.zero for i in range(b.dim)) for j in range(b.dim))
    b1 = span(F, [tuple(sum((a * x[t] for a, x in zip(cf, b.basis)), F.zero) for t in range(n))
                  for cf in coeffs], n)
    cert = ReducedProductCert(g1, b1, ProductKind.SEMIDIRECT)
    cert.verify(k)
    if not is_direct_sum(b, b1, c):
        raise AssertionError("b != b1 + c")
    if (g1 & b1) != z:
        raise AssertionError("g1 and b1 do not meet in Z(k)")
    if not brackets_into(k, b1, b1, z):
        raise AssertionError("[b1, b1] not inside Z(k)")
    grading = GradingAPlus(z, c, V, _gram(k, z, c, V))
    grading.verify(k)
    if not check_compatible(b1, grading, k):
        raise AssertionError("b1 is not compatible with the grading of g1")
    return TypeASplit(cert, grading)


# -- the tree ---------------------------------------------------------------


class LeafLabel(enum.Enum):
    HEISENBERG = "HEISENBERG"
    TYPE_A_PLUS = "TYPE_A_PLUS"
    TWO_STEP_PART = "TWO_STEP_PART"
    CENTER = "CENTER"
    TYPE_A = "TYPE_A"  # type (A) factor that is not 3-step; left unsplit


@dataclass(frozen=True)
class Leaf:
    label: LeafLabel
    span: Subspace


@dataclass(frozen=True)
class DecompositionTree:
    root: str
    stage1: Optional[ReducedProductCert]
    stage2: Optional[ReducedProductCert]
    grading: Optional[GradingAPlus]
    leaves: tuple
    adapted_basis: tuple  # rows: z, h0, c, V, a0
    warnings: tuple = field(default=())

    def adapted_algebra(self, g: LieAlgebra) -> LieAlgebra:
        return change_basis(g, self.adapted_basis, name=f"{g.name}|adapted")

    def recompose(self, g: LieAlgebra) -> LieAlgebra:
        """Map the adapted structure constants back to the original basis."""
        a = self.adapted_algebra(g)
        back = inverse(g.field, self.adapted_basis)
        return change_basis(a, back, name=g.name, labels=g.labels)

    def verify(self, g: LieAlgebra) -> None:
        if self.recompose(g).brackets != g.brackets:
            raise AssertionError("recomposition does not reproduce the structure constants")
        for cert in (self.stage1, self.stage2):
            if cert is not None:
                cert.verify(g)


def _map_grading(g: LieAlgebra, gr: GradingAPlus, emb: LinearMap) -> GradingAPlus:
    z, c, V = emb.image(gr.z), emb.image(gr.c), emb.image(gr.V)
    out = GradingAPlus(z, c, V, _gram(g, z, c, V))
    out.verify(g)
    return out


def _map_cert(cert: ReducedProductCert, emb: LinearMap, within: Subspace) -> ReducedProductCert:
    return ReducedProductCert(emb.image(cert.g1), emb.image(cert.g2), cert.kind, within)


def _pullback(ambient: Subspace, S: Subspace) -> Subspace:
    """``S`` (inside ``ambient``) in the rref coordinates of ``ambient``."""
    return span(S.field, [ambient.coordinates(v) for v in S.basis], ambient.dim)


def _leaf_for_part(g: LieAlgebra, S: Subspace) -> LeafLabel:
    if S == center(g):
        return LeafLabel.CENTER
    return LeafLabel.HEISENBERG if heisenberg_in(g, S) is not None else LeafLabel.TWO_STEP_PART


def full_decomposition(g: LieAlgebra) -> DecompositionTree:
    if nilpotency_step(g) is None:
        raise DecompositionError("algebra is not nilpotent")
    Z = center(g)
    if Z.dim != 1:
        raise DecompositionError(f"center has dimension {Z.dim}, expected 1")
    label = classify(g).label
    warnings = []
    stage1 = stage2 = grading = None
    leaves = []
    rows = [Z.basis[0]]

    if label is TypeLabel.HEISENBERG:
        leaves.append(Leaf(LeafLabel.HEISENBERG, g.whole))
        rows += complement(Z, g.whole).basis
        return _finish(g, stage1, stage2, grading, leaves, rows, warnings)

    factor = g.whole
    if label is TypeLabel.NOT_TYPE_A:
        stage1 = split_off_heisenberg(g)
        leaves.append(Leaf(LeafLabel.HEISENBERG, stage1.g1))
        rows += complement(Z, stage1.g1).basis
        factor = stage1.g2

    fa, emb = subalgebra(g, factor, name=f"{g.name}|factor")
    flabel = classify(fa).label
    if flabel is TypeLabel.TYPE_A_PLUS:
        grading = _map_grading(g, construct_grading(fa), emb)
        leaves.append(Leaf(LeafLabel.TYPE_A_PLUS, factor))
        rows += grading.c.basis + grading.V.basis
    elif flabel is TypeLabel.HEISENBERG:
        leaves.append(Leaf(LeafLabel.HEISENBERG, factor))
        rows += complement(Z, factor).basis
    elif nilpotency_step(fa) != 3:
        warnings.append(
            f"type (A) factor is {nilpotency_step(fa)}-step; the semidirect splitting needs 3-step"
        )
        leaves.append(Leaf(LeafLabel.TYPE_A, factor))
        rows += complement(Z, factor).basis
    else:
        sp = split_type_a(fa)
        stage2 = _map_cert(sp.cert, emb, factor)
        grading = _map_grading(g, sp.grading, emb)
        g1_label = LeafLabel.HEISENBERG if heisenberg_in(g, stage2.g1) else LeafLabel.TYPE_A_PLUS
        leaves.append(Leaf(g1_label, stage2.g1))
        leaves.append(Leaf(_leaf_for_part(g, stage2.g2), stage2.g2))
        rows += grading.c.basis + grading.V.basis + complement(Z, stage2.g2).basis
    return _finish(g, stage1, stage2, grading, leaves, rows, warnings)


def _finish(g, stage1, stage2, grading, leaves, rows, warnings) -> DecompositionTree:
    F, n = g.field, g.dim
    if span(F, rows, n).dim != n or len(rows) != n:
        raise AssertionError("adapted vectors do not form a basis")
    tree = DecompositionTree(g.name, stage1, stage2, grading, tuple(leaves),
                             tuple(tuple(r) for r in rows), tuple(warnings))
    tree.verify(g)
    return tree


def action_matrices(g: LieAlgebra, tree: DecompositionTree) -> list:
    """For each ``a0`` basis vector, the matrix of ``ad(a)`` from ``V`` to ``c``.

    Bases are pairing-normalized: ``[c_i, v_j] = delta_ij Z``.
    """
    if tree.stage2 is None or tree.grading is None:
        raise DecompositionError("no stage-2 split to read an action from")
    gr = tree.grading
    F = g.field
    _, cs, vs = gr.normalized_bases(g)
    csub = gr.c
    # columns: normalized c vectors in rref coordinates of c
    to_cs = inverse(F, tuple(zip(*(csub.coordinates(x) for x in cs))))
    out = []
    for a in complement(center(g), tree.stage2.g2).basis:
        cols = []
        for v in vs:
            w = bracket(g, a, v)
            if w not in csub:
                raise AssertionError("[a, V] not inside c")
            cv = csub.coordinates(w)
            cols.append(tuple(sum((r[k] * cv[k] for k in range(len(cv))), F.zero) for r in to_cs))
        out.append(tuple(zip(*cols)))
    return out
