"""Exact scalars over Q and F_p, dense matrices, and canonical subspaces.

Vectors are tuples of field elements and matrices are tuples of row tuples.
Every subspace is stored by its reduced row-echelon basis, so two subspaces of
the same ambient space are equal exactly when their stored bases are equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from . import _backend

Vector = tuple
Matrix = tuple  # tuple of row tuples

_MAX_NATIVE_PRIME = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Mod:
    """Residue class modulo an odd prime."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise ZeroDivisionError(f"{other} has no residue mod {self.p}")
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Mod(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Mod(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            if self.v == 0:
                raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Mod(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        o = self._other(other) if isinstance(other, (Mod, int, Fraction)) else NotImplemented
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals or a prime field of odd characteristic."""

    kind: str = "rationals"
    prime: Optional[int] = None

    def __post_init__(self):
        if self.kind == "rationals":
            if self.prime is not None:
                raise ValueError("the rational field takes no prime")
        elif self.kind == "prime_field":
            p = self.prime
            if not isinstance(p, int) or not _is_prime(p):
                raise ValueError(f"{p!r} is not a prime")
            if p == 2:
                raise ValueError("characteristic 2 is not supported")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_rational(self) -> bool:
        return self.kind == "rationals"

    @property
    def tag(self) -> str:
        return "Q" if self.is_rational else f"Fp:{self.prime}"

    @classmethod
    def parse(cls, tag: str) -> "FieldSpec":
        tag = tag.strip()
        if tag in ("Q", "QQ"):
            return cls()
        if tag.startswith("Fp:"):
            try:
                p = int(tag[3:])
            except ValueError:
                raise ValueError(f"bad field tag {tag!r}") from None
            return cls("prime_field", p)
        raise ValueError(f"bad field tag {tag!r}")

    def __call__(self, x) -> Union[Fraction, Mod]:
        if type(x) is Fraction and self.kind == "rationals":
            return x
        if isinstance(x, float):
            raise TypeError("floating-point scalars are not accepted")
        if self.is_rational:
            if isinstance(x, Mod):
                raise TypeError("cannot coerce a residue into Q")
            return Fraction(x)
        if isinstance(x, Mod):
            if x.p != self.prime:
                raise ValueError(f"residue mod {x.p} given for F_{self.prime}")
            return x
        q = Fraction(x)
        if q.denominator % self.prime == 0:
            raise ZeroDivisionError(f"{x} has no residue mod {self.prime}")
        return Mod(q.numerator * pow(q.denominator, -1, self.prime), self.prime)

    # scalars are immutable, so the constants can be shared
    @cached_property
    def zero(self):
        return self(0)

    @cached_property
    def one(self):
        return self(1)

    def vector(self, values: Iterable) -> Vector:
        return tuple(self(v) for v in values)

    def matrix(self, rows: Iterable[Iterable]) -> Matrix:
        return tuple(tuple(self(v) for v in row) for row in rows)

    def format(self, x) -> str:
        """Exact coefficient string ("3", "-2/5"; residues in [0, p))."""
        if isinstance(x, Mod):
            return str(x.v)
        q = Fraction(x)
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


QQ = FieldSpec()


def GF(p: int) -> FieldSpec:
    return FieldSpec("prime_field", p)


# ---------------------------------------------------------------------------
# vectors and matrices
# ---------------------------------------------------------------------------


def zero_vector(F: FieldSpec, n: int) -> Vector:
    z = F.zero
    return (z,) * n


def unit_vector(F: FieldSpec, n: int, i: int) -> Vector:
    z, o = F.zero, F.one
    return tuple(o if k == i else z for k in range(n))


def is_zero(v: Sequence) -> bool:
    return not any(v)


def add(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def dot(u: Sequence, v: Sequence):
    total = u[0] - u[0] if u else 0
    for a, b in zip(u, v):
        if a and b:
            total = a * b + total
    return total


def lincomb(F: FieldSpec, coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> Vector:
    out = list(zero_vector(F, n))
    for c, vec in zip(coeffs, vectors):
        if c:
            for k, x in enumerate(vec):
                if x:
                    out[k] = out[k] + c * x
    return tuple(out)


def identity(F: FieldSpec, n: int) -> Matrix:
    return tuple(unit_vector(F, n, i) for i in range(n))


def zeros(F: FieldSpec, rows: int, cols: int) -> Matrix:
    return tuple(zero_vector(F, cols) for _ in range(rows))


def transpose(m: Matrix, ncols: Optional[int] = None) -> Matrix:
    if not m:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*m))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def matvec(m: Matrix, v: Sequence) -> Vector:
    return tuple(dot(row, v) for row in m)


def _rows_for_kernel(F: FieldSpec, m: Sequence[Sequence]):
    if F.is_rational:
        return [[x if type(x) is Fraction else Fraction(x) for x in row] for row in m]
    return [[x.v if isinstance(x, Mod) else F(x).v for x in row] for row in m]


def _reduce(F: FieldSpec, rows: list, ncols: int) -> list[int]:
    if F.is_rational:
        return _backend.rref_generic(rows, ncols)
    if F.prime < _MAX_NATIVE_PRIME:
        return _backend.rref_mod_p(rows, ncols, F.prime)
    from . import _pykernels

    return _pykernels.rref_mod_p(rows, ncols, F.prime)


def rref(F: FieldSpec, m: Sequence[Sequence], ncols: Optional[int] = None):
    """Reduced row-echelon form of ``m``.

    Returns ``(rows, pivots, rank)`` with zero rows removed.
    """
    if ncols is None:
        ncols = len(m[0]) if m else 0
    rows = _rows_for_kernel(F, m)
    pivots = _reduce(F, rows, ncols)
    if F.is_rational:
        out = tuple(tuple(row) for row in rows)
    else:
        p = F.prime
        out = tuple(tuple(Mod(x, p) for x in row) for row in rows)
    return out, tuple(pivots), len(pivots)


def rank(F: FieldSpec, m: Sequence[Sequence], ncols: Optional[int] = None) -> int:
    return rref(F, m, ncols)[2]


def _kernel_vectors(F: FieldSpec, red: Matrix, pivots: Sequence[int], ncols: int) -> list[Vector]:
    pivset = set(pivots)
    zero, one = F.zero, F.one
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        vec = [zero] * ncols
        vec[f] = one
        for r, pc in enumerate(pivots):
            if red[r][f]:
                vec[pc] = -red[r][f]
        out.append(tuple(vec))
    return out


def kernel(F: FieldSpec, m: Sequence[Sequence], ncols: Optional[int] = None) -> "Subspace":
    """Null space ``{x : m x = 0}`` as a canonical subspace of ``F^ncols``."""
    if ncols is None:
        if not m:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(m[0])
    if not m:
        return Subspace.full(F, ncols)
    red, piv, _ = rref(F, m, ncols)
    return span(F, _kernel_vectors(F, red, piv, ncols), ncols)


def solve(F: FieldSpec, m: Sequence[Sequence], rhs: Sequence) -> Optional[Vector]:
    """One solution of ``m x = rhs`` (free variables set to zero), or None."""
    if len(m) != len(rhs):
        raise ValueError("right-hand side length does not match row count")
    ncols = len(m[0]) if m else 0
    aug = [list(row) + [b] for row, b in zip(m, rhs)]
    red, piv, _ = rref(F, aug, ncols + 1)
    if piv and piv[-1] == ncols:
        return None
    x = [F.zero] * ncols
    for r, pc in enumerate(piv):
        x[pc] = red[r][ncols]
    return tuple(x)


def inverse(F: FieldSpec, m: Matrix) -> Matrix:
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    aug = [list(row) + list(e) for row, e in zip(m, identity(F, n))]
    red, piv, rk = rref(F, aug, 2 * n)
    if rk < n or piv[n - 1] != n - 1:
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)


def det(F: FieldSpec, m: Matrix):
    n = len(m)
    a = [list(map(F, row)) for row in m]
    d = F.one
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return F.zero
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        lead = a[c][c]
        d = d * lead
        for i in range(c + 1, n):
            f = a[i][c] / lead
            if f:
                for k in range(c, n):
                    a[i][k] = a[i][k] - f * a[c][k]
    return d


def charpoly(F: FieldSpec, m: Matrix) -> tuple:
    """Coefficients of ``det(x I - m)``, lowest degree first (monic)."""
    n = len(m)
    h = [list(map(F, row)) for row in m]
    zero, one = F.zero, F.one
    # similarity reduction to upper Hessenberg form
    for c in range(n - 2):
        piv = next((i for i in range(c + 1, n) if h[i][c]), None)
        if piv is None:
            continue
        if piv != c + 1:
            h[c + 1], h[piv] = h[piv], h[c + 1]
            for row in h:
                row[c + 1], row[piv] = row[piv], row[c + 1]
        lead = h[c + 1][c]
        for i in range(c + 2, n):
            f = h[i][c] / lead
            if f:
                for k in range(n):
                    h[i][k] = h[i][k] - f * h[c + 1][k]
                for row in h:
                    row[c + 1] = row[c + 1] + f * row[i]
    polys = [[one]]
    for k in range(1, n + 1):
        prev = polys[k - 1]
        # (x - h_kk) p_{k-1}
        cur = [zero] + prev
        for d, a in enumerate(prev):
            cur[d] = cur[d] - h[k - 1][k - 1] * a
        prod = one
        for i in range(k - 1, 0, -1):
            prod = prod * h[i][i - 1]
            coeff = prod * h[i - 1][k - 1]
            if coeff:
                for d, a in enumerate(polys[i - 1]):
                    cur[d] = cur[d] - coeff * a
        polys.append(cur)
    return tuple(polys[n])


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``F^ambient_dim`` held in canonical (rref) form."""

    field: FieldSpec
    ambient_dim: int
    basis: Matrix = ()
    pivots: tuple = dc_field(default=())

    @classmethod
    def zero(cls, F: FieldSpec, n: int) -> "Subspace":
        return cls(F, n, (), ())

    @classmethod
    def full(cls, F: FieldSpec, n: int) -> "Subspace":
        return cls(F, n, identity(F, n), tuple(range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def reduce(self, v: Sequence) -> Vector:
        """Remainder of ``v`` after clearing the pivot coordinates."""
        v = list(v)
        for row, pc in zip(self.basis, self.pivots):
            c = v[pc]
            if c:
                for k, x in enumerate(row):
                    if x:
                        v[k] = v[k] - c * x
        return tuple(v)

    def __contains__(self, v) -> bool:
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        return is_zero(self.reduce(v))

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of ``v`` in the stored basis; ``v`` must lie in the subspace."""
        if v not in self:
            raise ValueError("vector is not in the subspace")
        return tuple(v[pc] for pc in self.pivots)

    def __le__(self, other: "Subspace") -> bool:
        _check_same(self, other)
        return all(row in other for row in self.basis)

    def __ge__(self, other: "Subspace") -> bool:
        return other <= self

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def annihilator(self) -> Matrix:
        """Rows ``A`` with ``A x = 0`` exactly when ``x`` lies in the subspace."""
        F, n = self.field, self.ambient_dim
        if not self.basis:
            return identity(F, n)
        return tuple(_kernel_vectors(F, self.basis, self.pivots, n))

    def is_zero(self) -> bool:
        return not self.basis

    def __repr__(self):
        rows = ", ".join("(" + ",".join(self.field.format(x) for x in r) + ")" for r in self.basis)
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis=[{rows}])"


def _check_same(U: Subspace, W: Subspace) -> None:
    if U.ambient_dim != W.ambient_dim:
        raise ValueError(f"ambient dimensions differ: {U.ambient_dim} vs {W.ambient_dim}")
    if U.field != W.field:
        raise ValueError("subspaces live over different fields")


def span(F: FieldSpec, vectors: Iterable[Sequence], n: int) -> Subspace:
    vectors = [tuple(v) for v in vectors]
    for v in vectors:
        if len(v) != n:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {n}")
    if not vectors:
        return Subspace.zero(F, n)
    red, piv, _ = rref(F, vectors, n)
    return Subspace(F, n, red, piv)


def subspace_sum(U: Subspace, W: Subspace) -> Subspace:
    _check_same(U, W)
    if not W.basis:
        return U
    if not U.basis:
        return W
    return span(U.field, U.basis + W.basis, U.ambient_dim)


def intersect(U: Subspace, W: Subspace) -> Subspace:
    _check_same(U, W)
    if not U.basis or not W.basis:
        return Subspace.zero(U.field, U.ambient_dim)
    conditions = U.annihilator() + W.annihilator()
    if not conditions:
        return Subspace.full(U.field, U.ambient_dim)
    return kernel(U.field, conditions, U.ambient_dim)


def complement(U: Subspace, W: Subspace) -> Subspace:
    """Deterministic ``X`` with ``U + X = W`` direct.

    Walks the rref basis of ``W`` in order (for ``W`` the whole space these are
    the standard coordinate vectors) and keeps each vector that is independent
    of what has been collected so far.
    """
    _check_same(U, W)
    if not U <= W:
        raise ValueError("first subspace is not contained in the second")
    F, n = U.field, U.ambient_dim
    current = U
    chosen = []
    for w in W.basis:
        if current.dim == W.dim:
            break
        if w not in current:
            chosen.append(w)
            current = span(F, current.basis + (w,), n)
    return span(F, chosen, n)


def is_direct_sum(W: Subspace, *parts: Subspace) -> bool:
    """True when ``W`` is the direct sum of ``parts``."""
    total = Subspace.zero(W.field, W.ambient_dim)
    dims = 0
    for p in parts:
        total = total + p
        dims += p.dim
    return total == W and dims == W.dim
