import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import rng_for, scramble
from kirlie.catalog import THREE_STEP, catalog
from kirlie.exactlin import GF, QQ
from kirlie.kirillov import (
    KirillovError,
    derived_in_centralizer,
    embedded_heisenberg,
    kirillov_data,
    kirillov_triple,
)
from kirlie.liecore import bracket, center, centralizer, second_center

APPLICABLE = THREE_STEP + ("heis3", "heis5", "filiform4", "filiform5")


@pytest.mark.parametrize("name", APPLICABLE)
@pytest.mark.parametrize("F", [QQ, GF(5)])
def test_dual_bases(name, F):
    g = catalog(name, F)
    kd = kirillov_data(g)
    zero = g.field.vector([0] * g.dim)
    for j, x in enumerate(kd.Xbasis):
        for k, y in enumerate(kd.Ybasis):
            assert bracket(g, x, y) == (kd.Z if j == k else zero)
    assert kd.second_center.dim + kd.centralizer.dim == g.dim + 1
    assert derived_in_centralizer(g, kd)


def test_n5n3_dual_basis():
    g = catalog("n5n3")
    kd = kirillov_data(g, [g.vec("X2"), g.vec("X3")])
    # [X5, X2] = X1 and [X4, X3] = X1
    assert kd.Xbasis == (g.vec("X5"), g.vec("X4"))


@pytest.mark.parametrize("name", ["n5n3", "n6n1", "n6n5", "heis5"])
def test_permuted_y_permutes_x(name):
    g = catalog(name)
    kd = kirillov_data(g)
    for perm in itertools.permutations(range(kd.m)):
        other = kirillov_data(g, [kd.Ybasis[p] for p in perm])
        assert other.Xbasis == tuple(kd.Xbasis[p] for p in perm)


@given(st.integers(0, 10**6), st.sampled_from(["n5n3", "n6n4", "n6n1"]))
def test_dual_bases_after_scrambling(seed, name):
    g, _ = scramble(catalog(name), rng_for(seed))
    kd = kirillov_data(g)
    for j, x in enumerate(kd.Xbasis):
        for k, y in enumerate(kd.Ybasis):
            w = bracket(g, x, y)
            assert w == (kd.Z if j == k else tuple(0 * c for c in w))


def test_triples():
    g = catalog("n4n1")
    t = kirillov_triple(g, g.vec("X2"))
    assert t.X == g.vec("X4") and t.g0 == g.span_of("X1", "X2", "X3")
    g = catalog("n6n1")
    t = kirillov_triple(g, g.vec("X4"))
    assert t.X == g.vec("X6") and t.g0.dim == 5
    with pytest.raises(KirillovError):
        kirillov_triple(g, g.vec("X1"))


def test_embedded_span_need_not_be_heisenberg():
    g = catalog("n5n3")
    emb = embedded_heisenberg(g, kirillov_data(g))
    assert emb.span == g.whole and emb.closed
    assert emb.cert is None and emb.obstructions  # [X5, X4] = X2 is not central
    h = catalog("heis5")
    assert embedded_heisenberg(h, kirillov_data(h)).cert.verify(h)
    g = catalog("n4n1")
    e = embedded_heisenberg(g, kirillov_data(g))
    assert e.cert is not None and e.span == g.span_of("X1", "X2", "X4")


def test_rejects_big_center():
    with pytest.raises(KirillovError):
        kirillov_data(catalog("abelian3"))
    g = catalog("n5n3")
    with pytest.raises(KirillovError):
        kirillov_data(g, [g.vec("X2")])


def test_m_zero_when_center_is_everything():
    from kirlie.liecore import LieAlgebra

    g = LieAlgebra.from_brackets("line", 1, {})
    kd = kirillov_data(g)
    assert kd.m == 0 and center(g) == second_center(g) == centralizer(g, second_center(g))
