import pytest

from kirlie.catalog import THREE_STEP, catalog
from kirlie.decompose import (
    DecompositionError,
    LeafLabel,
    ProductKind,
    action_matrices,
    full_decomposition,
    split_off_heisenberg,
    split_type_a,
    verify_reduced_product,
)
from kirlie.liecore import commute, fingerprint, second_center_of, subalgebra


def test_reduced_products():
    g = catalog("n6n1")
    assert verify_reduced_product(g, g.span_of("X1", "X2", "X3"), g.span_of("X1", "X4", "X5", "X6")) is ProductKind.DIRECT
    assert verify_reduced_product(g, g.whole, g.whole) is ProductKind.NONE
    with pytest.raises(DecompositionError):
        verify_reduced_product(g, g.span_of("X2", "X3"), g.whole)


def test_n5n6_stated_pair_is_not_a_reduced_product():
    g = catalog("n5n6")
    k, a = g.span_of("X1", "X2", "X5"), g.span_of("X1", "X3", "X4")
    # [X4, X5] = -X3 leaves k, and [X5, X3] = X2 leaves a
    assert verify_reduced_product(g, k, a) is ProductKind.NONE
    assert verify_reduced_product(g, a, k) is ProductKind.NONE
    with pytest.raises(DecompositionError):
        split_type_a(g)


def test_split_off_heisenberg():
    g = catalog("n6n1")
    cert = split_off_heisenberg(g)
    assert cert.kind is ProductKind.DIRECT
    assert cert.g1 == g.span_of("X1", "X2", "X3")
    assert cert.g2 == g.span_of("X1", "X4", "X5", "X6")
    factor, _ = subalgebra(g, cert.g2)
    assert fingerprint(factor).as_dict() | {"dim": 0} == fingerprint(catalog("n4n1")).as_dict() | {"dim": 0}
    c2 = second_center_of(g, cert.g2)
    assert commute(g, c2, c2)
    assert split_off_heisenberg(catalog("n4n1")) is None
    assert split_off_heisenberg(catalog("heis5")) is None
    with pytest.raises(DecompositionError):
        split_off_heisenberg(catalog("abelian3"))


@pytest.mark.parametrize(
    "name,g1,b1",
    [
        ("n4n1", ["X1", "X2", "X4"], ["X1", "X3"]),
        ("n6n4", ["X1", "X2", "X3", "X4", "X5"], ["X1", "X6"]),
        ("n6n5", ["X1", "X2", "X3", "X4", "X6"], ["X1", "X5"]),
        ("n6n6", ["X1", "X2", "X3", "X4", "X5"], ["X1", "X6"]),
    ],
)
def test_split_type_a(name, g1, b1):
    g = catalog(name)
    sp = split_type_a(g)
    assert sp.cert.g1 == g.span_of(*g1) and sp.cert.g2 == g.span_of(*b1)
    assert sp.cert.kind is ProductKind.SEMIDIRECT
    assert sp.cert.quotient_check(g)


def test_n6n5_factor_is_n5n3():
    g = catalog("n6n5")
    sp = split_type_a(g)
    k, _ = subalgebra(g, sp.cert.g1)
    assert fingerprint(k).as_dict() | {"dim": 0} == fingerprint(catalog("n5n3")).as_dict() | {"dim": 0}
    assert split_type_a(catalog("n5n3")) is None


def test_full_decomposition_n6n1():
    g = catalog("n6n1")
    t = full_decomposition(g)
    assert t.stage1.g1 == g.span_of("X1", "X2", "X3")
    assert t.stage2.g1 == g.span_of("X1", "X4", "X6") and t.stage2.g2 == g.span_of("X1", "X5")
    assert [leaf.label for leaf in t.leaves] == [LeafLabel.HEISENBERG, LeafLabel.HEISENBERG, LeafLabel.TWO_STEP_PART]


def test_single_leaves():
    t = full_decomposition(catalog("n5n3"))
    assert [leaf.label for leaf in t.leaves] == [LeafLabel.TYPE_A_PLUS] and t.stage2 is None
    t = full_decomposition(catalog("n6n6"))
    assert t.stage1 is None and t.leaves[0].label is LeafLabel.HEISENBERG
    t = full_decomposition(catalog("n5n6"))
    assert t.leaves[0].label is LeafLabel.TYPE_A and t.warnings


@pytest.mark.parametrize("name", THREE_STEP + ("heis3", "heis5", "filiform5"))
def test_recomposition(name):
    g = catalog(name)
    t = full_decomposition(g)
    assert t.recompose(g).brackets == g.brackets
    for cert in (t.stage1, t.stage2):
        if cert is not None:
            cert.verify(g)
            assert cert.quotient_check(g)


def test_n6n4_and_n6n6_actions_differ():
    a4 = action_matrices(catalog("n6n4"), full_decomposition(catalog("n6n4")))
    a6 = action_matrices(catalog("n6n6"), full_decomposition(catalog("n6n6")))
    assert len(a4) == len(a6) == 1
    assert a4 != a6
    assert a4[0] == ((0, -1), (-1, 0)) and a6[0] == ((-1, 0), (0, -1))
