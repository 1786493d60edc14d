"""Acceptance suite: ten exact checks, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py``; the lines are collected in the
terminal summary under "acceptance".
"""

import functools
import itertools

import pytest
import sympy

from helpers import ACCEPTANCE, cocycle_space, random_combination, random_skew, random_two_step, rng_for
from kirlie.catalog import THREE_STEP, catalog, catalog_list
from kirlie.coadjoint import (
    find_abelian_ideal_polarization,
    flatness_input,
    generic_functional,
    has_flat_generic_orbits,
    is_polarization,
    stabilizer,
)
from kirlie.decompose import LeafLabel, ProductKind, full_decomposition, verify_reduced_product
from kirlie.documents import algebra_to_obj
from kirlie.exactlin import GF, QQ, charpoly, det, span
from kirlie.extend import (
    PsiMap,
    algebra_to_psi,
    central_extension,
    extract_cocycle,
    gl_action,
    gl_iso,
    psi_grading,
    psi_membership,
    psi_to_algebra,
    validate_cocycle,
)
from kirlie.kirillov import derived_in_centralizer, kirillov_data
from kirlie.liecore import (
    HomCheck,
    LieAlgebra,
    bracket,
    center,
    center_of,
    centralizer,
    derived_subalgebra,
    second_center,
    second_center_of,
    validate,
    verify_homomorphism,
)
from kirlie.typeclass import TypeLabel, classify, construct_grading, grading_derivation, heisenberg_complement, is_derivation

FIELDS = (QQ, GF(5))


class StatedSpanMismatch(Exception):
    """A span written down for a fixture that no valid certificate can have."""


def criterion(n, text):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper():
            try:
                fn()
            except BaseException as exc:
                ACCEPTANCE[n] = f"FAIL criterion {n}: {text} -- {type(exc).__name__}: {exc}"
                raise
            ACCEPTANCE[n] = f"PASS criterion {n}: {text}"

        return wrapper

    return deco


def star(g, label):
    return tuple(g.field.one if x == label else g.field.zero for x in g.labels)


# Z(g), C2(g), C(C2(g):g) for each fixture
SPANS = {
    "n4n1": (["X1"], ["X1", "X2"], ["X1", "X2", "X3"]),
    "n5n3": (["X1"], ["X1", "X2", "X3"], ["X1", "X2", "X3"]),
    "n5n6": (["X1"], ["X1", "X2"], ["X1", "X2", "X3", "X4"]),
    "n6n1": (["X1"], ["X1", "X2", "X3", "X4"], None),
    "n6n4": (["X1"], ["X1", "X2", "X3"], ["X1", "X2", "X3", "X6"]),
    "n6n5": (["X1"], ["X1", "X2", "X3"], ["X1", "X2", "X3", "X5"]),
    "n6n6": (["X1"], ["X1", "X2", "X3"], ["X1", "X2", "X3", "X6"]),
}


@criterion(1, "characteristic subspaces of the seven fixtures")
def test_criterion_1():
    for name in THREE_STEP:
        for F in FIELDS:
            g = catalog(name, F)
            z, c2, b = SPANS[name]
            assert center(g) == g.span_of(*z), name
            assert second_center(g) == g.span_of(*c2), name
            if b is not None:
                assert centralizer(g, second_center(g)) == g.span_of(*b), name
    g = catalog("n6n1")
    assert center_of(g, second_center(g)) == g.span_of("X1", "X4")


def _random_extensions(F, count, seed):
    rng = rng_for(seed)
    out, tries = [], 0
    while len(out) < count:
        tries += 1
        assert tries < 50 * count, "too few extensions with 1-dimensional center"
        g0 = random_two_step(F, rng.randint(2, 5), rng)
        omega = random_combination(F, cocycle_space(g0), g0.dim, rng)
        if validate_cocycle(g0, omega).center_ok:
            out.append(central_extension(g0, omega))
    return out


@criterion(2, "dim C2 + dim C(C2:g) = dim g + 1 on the catalog and 400 random extensions")
def test_criterion_2():
    pool = [catalog(name) for name in catalog_list()]
    for F in FIELDS:
        pool += _random_extensions(F, 200, seed=2 + (F.prime or 0))
    checked = 0
    for g in pool:
        if center(g).dim != 1:
            continue
        c2 = second_center(g)
        assert c2.dim + centralizer(g, c2).dim == g.dim + 1, g.name
        checked += 1
    assert checked >= 400


@criterion(3, "Kirillov dual bases and their permutation behaviour")
def test_criterion_3():
    for name in THREE_STEP + ("heis3", "heis5", "filiform4", "filiform5"):
        for F in FIELDS:
            g = catalog(name, F)
            kd = kirillov_data(g)
            zero = F.vector([0] * g.dim)
            for (j, x), (k, y) in itertools.product(enumerate(kd.Xbasis), enumerate(kd.Ybasis)):
                assert bracket(g, x, y) == (kd.Z if j == k else zero), (name, j, k)
            for perm in itertools.permutations(range(kd.m)):
                other = kirillov_data(g, [kd.Ybasis[p] for p in perm])
                assert other.Xbasis == tuple(kd.Xbasis[p] for p in perm), (name, perm)


VERDICTS = {
    "n5n3": TypeLabel.TYPE_A_PLUS,
    "n4n1": TypeLabel.TYPE_A_ONLY,
    "n5n6": TypeLabel.TYPE_A_ONLY,
    "n6n4": TypeLabel.TYPE_A_ONLY,
    "n6n5": TypeLabel.TYPE_A_ONLY,
    "n6n6": TypeLabel.TYPE_A_ONLY,
    "n6n1": TypeLabel.NOT_TYPE_A,
    "heis3": TypeLabel.HEISENBERG,
    "heis5": TypeLabel.HEISENBERG,
}


@criterion(4, "classification verdicts")
def test_criterion_4():
    for name, label in VERDICTS.items():
        for F in FIELDS:
            assert classify(catalog(name, F)).label is label, name


# (k, a) of the outermost split as written for each fixture
FACTORS = {
    "n4n1": (["X1", "X2", "X4"], ["X1", "X3"]),
    "n5n6": (["X1", "X2", "X5"], ["X1", "X3", "X4"]),
    "n6n1": (["X1", "X2", "X3"], ["X1", "X4", "X5", "X6"]),
    "n6n4": (["X1", "X2", "X3", "X4", "X5"], ["X1", "X6"]),
    "n6n5": (["X1", "X2", "X3", "X4", "X6"], ["X1", "X5"]),
    "n6n6": (["X1", "X2", "X3", "X4", "X5"], ["X1", "X6"]),
}


@pytest.mark.xfail(raises=StatedSpanMismatch, strict=True, reason="n5n6: the written pair is not a reduced product")
@criterion(5, "decomposition certificates, re-verification and recomposition")
def test_criterion_5():
    mismatches = []
    for name in THREE_STEP:
        g = catalog(name)
        t = full_decomposition(g)
        r = t.recompose(g)
        assert algebra_to_obj(r)["brackets"] == algebra_to_obj(g)["brackets"], name
        certs = [c for c in (t.stage1, t.stage2) if c is not None]
        for cert in certs:
            assert verify_reduced_product(g, cert.g1, cert.g2, cert.within) is cert.kind, name
            assert cert.quotient_check(g), name
        if name == "n5n3":
            assert not certs and [leaf.label for leaf in t.leaves] == [LeafLabel.TYPE_A_PLUS]
            continue
        k, a = (g.span_of(*s) for s in FACTORS[name])
        if not certs or (certs[0].g1, certs[0].g2) != (k, a):
            kind = verify_reduced_product(g, k, a)
            mismatches.append(f"{name}: written spans give {kind.name}, not a reduced product")
            continue
        assert certs[0].kind is (ProductKind.DIRECT if name == "n6n1" else ProductKind.SEMIDIRECT)
    if mismatches:
        raise StatedSpanMismatch("; ".join(mismatches))


@criterion(6, "grading derivation of n5n3: Leibniz and characteristic polynomial")
def test_criterion_6():
    g = catalog("n5n3")
    D = grading_derivation(g, construct_grading(g)).map
    assert is_derivation(g, D)
    n = g.dim
    e = [g.field.vector([1 if i == k else 0 for i in range(n)]) for k in range(n)]
    pairs = list(itertools.combinations(range(n), 2))
    assert len(pairs) == 10
    for i, j in pairs:
        lhs = D(bracket(g, e[i], e[j]))
        rhs = tuple(a + b for a, b in zip(bracket(g, D(e[i]), e[j]), bracket(g, e[i], D(e[j]))))
        assert lhs == rhs, (i, j)
    x = sympy.Symbol("x")
    oracle = sympy.Poly(sympy.expand((x - 3) * (x - 2) ** 2 * (x - 1) ** 2), x).all_coeffs()[::-1]
    assert charpoly(QQ, D.matrix) == tuple(QQ(int(c)) for c in oracle)
    assert sympy.Matrix(D.matrix).charpoly(x).as_expr() == sympy.expand((x - 3) * (x - 2) ** 2 * (x - 1) ** 2)
    assert det(QQ, D.matrix) != 0


@criterion(7, "stabilizers at xi0, the n4n1 witness and the n5n3 polarization")
def test_criterion_7():
    for name in ("n5n3", "n5n6"):
        g = catalog(name)
        xi0 = generic_functional(g, full_decomposition(g))
        assert xi0 == star(g, "X1")
        rep = stabilizer(g, xi0)
        assert rep.stabilizer == g.span_of("X1") and rep.orbit_dim == 4, name
    g = catalog("n4n1")
    v = has_flat_generic_orbits(g, *flatness_input(g))
    assert v.report.stabilizer == g.span_of("X1", "X3")
    assert v.flat is False and v.witness == g.vec("X3")
    g = catalog("n5n3")
    v = has_flat_generic_orbits(g, *flatness_input(g))
    c2k = second_center_of(g, v.cert.g1)
    assert c2k == g.span_of("X1", "X2", "X3")
    assert is_polarization(g, c2k, v.xi0)
    assert find_abelian_ideal_polarization(g, v) == c2k


@criterion(8, "cocycle extraction round trip and Jacobi <=> cocycle on 200 pairs")
def test_criterion_8():
    for name in THREE_STEP:
        g = catalog(name)
        ex = extract_cocycle(g)
        assert verify_homomorphism(ex.iso, ex.extension, g) is HomCheck.ISO, name
        assert central_extension(ex.g0, ex.omega).brackets == ex.extension.brackets, name
    for F in FIELDS:
        rng = rng_for(8 + (F.prime or 0))
        for _ in range(100):
            g0 = random_two_step(F, rng.randint(3, 5), rng)
            good = random_combination(F, cocycle_space(g0), g0.dim, rng)
            noise = random_skew(F, g0.dim, rng)
            bent = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(good, noise))
            for omega in (good, bent):
                rep = validate_cocycle(g0, omega)
                assert validate(central_extension(g0, omega, check=False)).ok == rep.is_cocycle
            assert validate_cocycle(g0, good).is_cocycle


def _random_psi(F, n, rng):
    vals = {(i, j): [rng.randint(-4, 4) for _ in range(n)] for i in range(n) for j in range(i)}
    return PsiMap.from_values(F, n, vals)


def _random_gl(F, n, rng):
    while True:
        m = tuple(tuple(F(rng.randint(-4, 4)) for _ in range(n)) for _ in range(n))
        if det(F, m):
            return m


@criterion(9, "psi round trip, GL action law and explicit isomorphisms")
def test_criterion_9():
    for F in FIELDS:
        rng = rng_for(9 + (F.prime or 0))
        grading = psi_grading(2, F)
        for _ in range(50):
            psi = _random_psi(F, 2, rng)
            assert psi_membership(psi)
            assert algebra_to_psi(psi_to_algebra(psi), grading) == psi
        for _ in range(50):
            psi = _random_psi(F, 2, rng)
            a, b = _random_gl(F, 2, rng), _random_gl(F, 2, rng)
            ab = tuple(tuple(sum((a[i][k] * b[k][j] for k in range(2)), F.zero) for j in range(2)) for i in range(2))
            assert gl_action(ab, psi) == gl_action(a, gl_action(b, psi))
            q = gl_action(a, psi)
            assert psi_membership(q)
            assert verify_homomorphism(gl_iso(a, psi), psi_to_algebra(psi), psi_to_algebra(q)) is HomCheck.ISO


def _random_subspace(F, n, rng):
    k = rng.randint(0, n)
    return span(F, [[F(rng.randint(-2, 2)) for _ in range(n)] for _ in range(k)], n)


@criterion(10, "property suite on the catalog")
def test_criterion_10():
    bad = LieAlgebra.from_brackets("bad", 3, {(3, 1): {1: 1}, (3, 2): {2: 1}, (2, 1): {1: 1}})
    assert not validate(bad).ok
    for name in catalog_list():
        g = catalog(name)
        assert validate(g).ok, name
        assert center(g) <= second_center(g), name
        if center(g).dim == 1:
            c2 = second_center(g)
            assert derived_subalgebra(g) <= centralizer(g, c2), name
            assert derived_in_centralizer(g, kirillov_data(g)), name
    rng = rng_for(10)
    for _ in range(200):
        name = rng.choice(catalog_list())
        g = catalog(name)
        xi = [rng.randint(-3, 3) for _ in range(g.dim)]
        rep = stabilizer(g, xi)
        assert rep.orbit_dim % 2 == 0 and center(g) <= rep.stabilizer, name
    for F in (QQ, GF(3)):
        for _ in range(100):
            U, W = _random_subspace(F, 5, rng), _random_subspace(F, 5, rng)
            X = U & _random_subspace(F, 5, rng)
            assert (U + W).dim + (U & W).dim == U.dim + W.dim
            assert U & (W + X) == (U & W) + X
    g = catalog("n6n1")
    h, _ = heisenberg_complement(second_center(g), g)
    assert center_of(g, second_center(g)) == second_center_of(g, centralizer(g, h))


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
