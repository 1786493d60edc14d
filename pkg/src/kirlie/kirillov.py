"""Dual bases for algebras with a 1-dimensional center.

For ``C_2 g = Z(g) + Y`` and ``g = X + C(C_2 g : g)`` the bracket pairs ``X``
with ``Y`` nondegenerately into the center.  :func:`kirillov_data` produces the
dual bases and the functionals ``gamma_k`` with ``[x, Y_k] = gamma_k(x) Z``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .exactlin import Subspace, complement, inverse, is_zero, lincomb, span
from .liecore import (
    HeisenbergCert,
    LieAlgebra,
    bracket,
    brackets_into,
    center,
    centralizer,
    heisenberg_in,
    is_ideal,
    is_subalgebra,
    second_center,
)


class KirillovError(ValueError):
    pass


@dataclass(frozen=True)
class KirillovData:
    Z: tuple
    Yspace: Subspace
    Xspace: Subspace
    Ybasis: tuple
    Xbasis: tuple
    gammas: tuple  # each a coefficient vector on the standard basis of g
    second_center: Subspace
    centralizer: Subspace  # C(C_2 g : g)

    @property
    def m(self) -> int:
        return len(self.Ybasis)

    def verify(self, g: LieAlgebra) -> None:
        """Re-check every invariant; raises AssertionError on failure."""
        zvec = self.Z
        zero = tuple(x * 0 for x in zvec)
        F = g.field
        for j, x in enumerate(self.Xbasis):
            for k, y in enumerate(self.Ybasis):
                want = zvec if j == k else zero
                assert bracket(g, x, y) == want, f"[X_{j + 1}, Y_{k + 1}] is not delta * Z"
        for i in range(g.dim):
            for k, y in enumerate(self.Ybasis):
                want = tuple(self.gammas[k][i] * z for z in zvec)
                assert bracket(g, g.e(i), y) == want, "gamma functional mismatch"
        for gam in self.gammas:
            for b in self.centralizer.basis:
                assert not sum((a * c for a, c in zip(gam, b)), F.zero), "gamma does not vanish on C(C2g:g)"
        assert self.second_center.dim + self.centralizer.dim == g.dim + 1, "dimension formula fails"
        assert span(F, self.Ybasis, g.dim) == self.Yspace
        assert span(F, self.Xbasis, g.dim) == self.Xspace


def z_coefficient(Zsub: Subspace, v: Sequence):
    """Scalar ``t`` with ``v = t * Z`` for the normalized central vector."""
    if v not in Zsub:
        raise KirillovError("bracket value is not central")
    return v[Zsub.pivots[0]]


def kirillov_data(g: LieAlgebra, Ybasis: Optional[Sequence[Sequence]] = None) -> KirillovData:
    F, n = g.field, g.dim
    Zsub = center(g)
    if Zsub.dim != 1:
        raise KirillovError(f"center has dimension {Zsub.dim}, expected 1")
    zvec = Zsub.basis[0]
    c2 = second_center(g)
    b = centralizer(g, c2)
    if Ybasis is None:
        Yspace = complement(Zsub, c2)
        Ybasis = Yspace.basis
    else:
        Ybasis = tuple(tuple(F(x) for x in y) for y in Ybasis)
        Yspace = span(F, Ybasis, n)
        if Yspace.dim != len(Ybasis):
            raise KirillovError("supplied Y vectors are linearly dependent")
        if not Yspace <= c2 or not (Yspace & Zsub).is_zero() or Yspace.dim + 1 != c2.dim:
            raise KirillovError("supplied Y basis is not a complement of Z(g) in C2(g)")
    Xspace = complement(b, g.whole)
    m = len(Ybasis)
    if Xspace.dim != m:
        raise KirillovError("dimension formula dim C2 + dim C(C2:g) = dim g + 1 fails")
    if m == 0:
        return KirillovData(zvec, Yspace, Xspace, (), (), (), c2, b)
    xs = Xspace.basis
    gram = tuple(tuple(z_coefficient(Zsub, bracket(g, x, y)) for y in Ybasis) for x in xs)
    try:
        ginv = inverse(F, gram)
    except ZeroDivisionError:
        raise KirillovError("bracket pairing between X and Y is degenerate") from None
    # X_j = sum_l A[j][l] x_l with A gram = I, i.e. A = gram^{-1}
    Xbasis = tuple(lincomb(F, ginv[j], xs, n) for j in range(m))
    gammas = tuple(
        tuple(z_coefficient(Zsub, bracket(g, g.e(i), y)) for i in range(n)) for y in Ybasis
    )
    kd = KirillovData(zvec, Yspace, Xspace, tuple(Ybasis), Xbasis, gammas, c2, b)
    kd.verify(g)
    return kd


@dataclass(frozen=True)
class KirillovTriple:
    X: tuple
    Y: tuple
    Z: tuple
    g0: Subspace


def kirillov_triple(g: LieAlgebra, Y: Sequence) -> KirillovTriple:
    """``X`` with ``[X, Y] = Z`` and the ideal ``g0 = {V : [V, Y] = 0}``."""
    F, n = g.field, g.dim
    Y = tuple(F(x) for x in Y)
    Zsub = center(g)
    if Zsub.dim != 1:
        raise KirillovError(f"center has dimension {Zsub.dim}, expected 1")
    c2 = second_center(g)
    if Y not in c2 or Y in Zsub:
        raise KirillovError("Y must lie in C2(g) but outside Z(g)")
    lineY = span(F, [Y], n)
    rest = complement(Zsub + lineY, c2)
    kd = kirillov_data(g, (Y,) + rest.basis)
    X = kd.Xbasis[0]
    g0 = centralizer(g, lineY)
    if not is_ideal(g, g0):
        raise AssertionError("centralizer of Y is not an ideal")
    if g0 + span(F, [X], n) != g.whole or X in g0:
        raise AssertionError("g is not g0 + KX")
    return KirillovTriple(X, Y, kd.Z, g0)


@dataclass(frozen=True)
class EmbeddedHeisenberg:
    span: Subspace
    closed: bool
    cert: Optional[HeisenbergCert]
    # pairs (a, b) of spanning vectors whose bracket leaves the center
    obstructions: tuple


def embedded_heisenberg(g: LieAlgebra, kd: KirillovData) -> EmbeddedHeisenberg:
    """The span of ``X_j, Y_k, Z`` and whether it is a Heisenberg subalgebra.

    ``[X_j, Y_k] = delta_jk Z`` always holds, but ``[X_i, X_j]`` or
    ``[Y_i, Y_k]`` may be nonzero, in which case no certificate is returned.
    """
    F, n = g.field, g.dim
    vecs = list(kd.Xbasis) + list(kd.Ybasis) + [kd.Z]
    S = span(F, vecs, n)
    Zsub = span(F, [kd.Z], n)
    obstructions = []
    for a in range(len(vecs)):
        for b in range(a):
            v = bracket(g, vecs[a], vecs[b])
            if not is_zero(v) and v not in Zsub:
                obstructions.append((a, b))
    closed = is_subalgebra(g, S)
    cert = heisenberg_in(g, S) if closed else None
    return EmbeddedHeisenberg(S, closed, cert, tuple(obstructions))


def derived_in_centralizer(g: LieAlgebra, kd: KirillovData) -> bool:
    """``[g, g]`` inside ``C(C_2 g : g)`` and the latter an ideal."""
    return brackets_into(g, g.whole, g.whole, kd.centralizer) and is_ideal(g, kd.centralizer)
