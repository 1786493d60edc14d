"""Coadjoint stabilizers, flat generic orbits and polarizations."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .decompose import (
    DecompositionTree,
    ProductKind,
    ReducedProductCert,
    full_decomposition,
)
from .exactlin import Matrix, Subspace, complement, inverse, kernel, rank, span
from .liecore import (
    LieAlgebra,
    bracket,
    brackets_into,
    center,
    centralizer,
    commute,
    heisenberg_in,
    is_ideal,
    is_subalgebra,
)
from .typeclass import GradingAPlus, PreconditionError, check_compatible

Functional = tuple


def evaluate(xi: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(xi, v)), xi[0] - xi[0])


@dataclass(frozen=True)
class OrbitReport:
    stabilizer: Subspace
    orbit_dim: int
    is_flat_at_xi: bool
    skew_form: Matrix


def skew_form(g: LieAlgebra, xi: Sequence) -> Matrix:
    n = g.dim
    return tuple(tuple(evaluate(xi, g.basis_bracket(i, j)) for j in range(n)) for i in range(n))


def stabilizer(g: LieAlgebra, xi: Sequence) -> OrbitReport:
    F, n = g.field, g.dim
    xi = tuple(F(x) for x in xi)
    if len(xi) != n:
        raise ValueError(f"functional has length {len(xi)}, expected {n}")
    B = skew_form(g, xi)
    stab = kernel(F, B, n)
    r = rank(F, B, n)
    if n - stab.dim != r or r % 2:
        raise AssertionError("skew form rank is inconsistent")
    Z = center(g)
    if not Z <= stab:
        raise AssertionError("center is not inside the stabilizer")
    return OrbitReport(stab, r, stab == Z, B)


def functional_vanishing_on(g: LieAlgebra, zvec: Sequence, kernel_space: Subspace) -> Functional:
    """The functional with value 1 on ``zvec`` and 0 on ``kernel_space``."""
    F, n = g.field, g.dim
    rows = [tuple(zvec)] + list(kernel_space.basis)
    if len(rows) != n or span(F, rows, n).dim != n:
        raise ValueError("central vector and kernel do not span the algebra")
    inv = inverse(F, tuple(rows))
    return tuple(inv[i][0] for i in range(n))


def generic_functional(g: LieAlgebra, tree: DecompositionTree) -> Functional:
    """``xi0``: 1 on the normalized central vector, 0 on the rest of the adapted basis."""
    rows = tree.adapted_basis
    return functional_vanishing_on(g, rows[0], span(g.field, rows[1:], g.dim))


@dataclass(frozen=True)
class FlatnessVerdict:
    flat: bool
    xi0: Functional
    report: OrbitReport
    witness: Optional[tuple]  # nonzero a0-vector in the stabilizer when not flat
    cert: ReducedProductCert
    grading: GradingAPlus


def _check_preconditions(g: LieAlgebra, cert: ReducedProductCert, grading: GradingAPlus) -> None:
    cert.verify(g)
    if cert.kind is ProductKind.NONE:
        raise PreconditionError("certificate is not a reduced product")
    if grading.k != cert.g1:
        raise PreconditionError("grading does not cover k")
    grading.verify(g)
    a, z = cert.g2, grading.z
    if not is_subalgebra(g, a):
        raise PreconditionError("a is not a subalgebra")
    if not brackets_into(g, a, a, z):
        raise PreconditionError("[a, a] is not contained in z")
    if not check_compatible(a, grading, g):
        raise PreconditionError("a is not compatible with the grading")


def has_flat_generic_orbits(g: LieAlgebra, cert: ReducedProductCert, grading: GradingAPlus) -> FlatnessVerdict:
    """Decide flatness from the shape of ``a`` in ``g = k x|~ a``; cross-check at ``xi0``."""
    _check_preconditions(g, cert, grading)
    Z = center(g)
    a = cert.g2
    a0 = complement(Z, a)
    xi0 = functional_vanishing_on(g, grading.zvec, grading.c + a0 + grading.V)
    report = stabilizer(g, xi0)
    flat = a == Z or heisenberg_in(g, a) is not None
    witness = None
    if flat:
        if report.stabilizer != Z:
            raise AssertionError("criterion says flat but the stabilizer at xi0 is larger than the center")
    else:
        extra = complement(Z, report.stabilizer & a)
        if extra.is_zero():
            raise AssertionError("criterion says not flat but no a0-vector stabilizes xi0")
        witness = extra.basis[0]
    return FlatnessVerdict(flat, xi0, report, witness, cert, grading)


def flatness_input(g: LieAlgebra, tree: Optional[DecompositionTree] = None):
    """``(cert, grading)`` for ``g = k x|~ a`` read off a decomposition, or ``None``.

    A type (A+) algebra is ``g x|~ Z(g)``; a Heisenberg algebra is ``z x|~ g``.
    After a Heisenberg split the Heisenberg part joins the 2-step factor.
    """
    tree = tree or full_decomposition(g)
    F, n = g.field, g.dim
    Z = center(g)
    if tree.grading is None:
        if len(tree.leaves) == 1 and tree.leaves[0].label.value == "HEISENBERG":
            empty = Subspace.zero(F, n)
            gr = GradingAPlus(Z, empty, empty, ())
            return ReducedProductCert(Z, g.whole, ProductKind.SEMIDIRECT), gr
        return None
    if tree.stage2 is None:
        return ReducedProductCert(g.whole, Z, ProductKind.SEMIDIRECT), tree.grading
    a = tree.stage2.g2
    if tree.stage1 is not None:
        a = a + tree.stage1.g1
    return ReducedProductCert(tree.stage2.g1, a, ProductKind.SEMIDIRECT), tree.grading


def is_polarization(g: LieAlgebra, p: Subspace, xi: Sequence) -> bool:
    F = g.field
    xi = tuple(F(x) for x in xi)
    if not is_subalgebra(g, p):
        return False
    for u in p.basis:
        for v in p.basis:
            if evaluate(xi, bracket(g, u, v)):
                return False
    return 2 * p.dim == g.dim + stabilizer(g, xi).stabilizer.dim


def find_abelian_ideal_polarization(g: LieAlgebra, verdict: FlatnessVerdict) -> Subspace:
    """``z + c`` plus a Lagrangian half of the Heisenberg factor."""
    if not verdict.flat:
        raise PreconditionError("generic orbits are not flat")
    F, n = g.field, g.dim
    gr = verdict.grading
    p = gr.z + gr.c
    a = verdict.cert.g2
    if a != center(g):
        hc = heisenberg_in(g, a)
        p = p + span(F, hc.P, n)
    if not commute(g, p, p):
        raise AssertionError("polarization candidate is not abelian")
    if not is_ideal(g, p):
        raise AssertionError("polarization candidate is not an ideal")
    if not is_polarization(g, p, verdict.xi0):
        raise AssertionError("candidate is not a polarization at xi0")
    if centralizer(g, p) != p:
        raise AssertionError("candidate is not maximal abelian")
    return p


def random_orbit_check(g: LieAlgebra, xi0: Sequence, trials: int = 20, seed: int = 0) -> bool:
    """Orbit dimension at ``xi0`` dominates random functionals nonzero on the center."""
    F, n = g.field, g.dim
    zvec = center(g).basis[0]
    top = stabilizer(g, xi0).orbit_dim
    rng = random.Random(seed)
    bound = 50 if F.is_rational else F.prime - 1
    done = 0
    while done < trials:
        xi = tuple(F(rng.randint(-bound, bound)) for _ in range(n))
        if not evaluate(xi, zvec):
            continue
        done += 1
        if stabilizer(g, xi).orbit_dim > top:
            return False
    return True
