import pytest

from catkernel import analysis, slice as slices
from catkernel.core import slice_category
from catkernel.errors import MissingPullback
from catkernel.finset import FinSetCat, Fn

from conftest import load


@pytest.fixture(scope="module")
def ctx2():
    return slices.slice_context(FinSetCat(2), 2)


def test_slice_terminal_is_identity(ctx2):
    obj, v = slices.slice_terminal(ctx2)
    assert v
    assert obj == Fn(2, 2, (0, 1))


def test_product_orientations_agree(ctx2):
    objs = ctx2.slice.objects
    for x1 in objs[:6]:
        for x2 in objs[:6]:
            P = slices.slice_product(ctx2, x1, x2)
            Q = slices.slice_product_alt(ctx2, x1, x2)
            assert slices.product_comparison(ctx2, P, Q)


def test_slice_report_finset2():
    for A in range(3):
        rep = slices.slice_report(slices.slice_context(FinSetCat(2), A))
        assert rep.ok, rep.to_json()


def test_adjoint_triple_finset2():
    C = FinSetCat(2)
    for A in range(3):
        ctx = slices.slice_context(C, A)
        for f in (m for m in C.morphisms if C.cod(m) == A):
            t = slices.check_triple(ctx.at(C.dom(f)), f)
            assert t["sigma"].ok and t["pi"].ok


def test_adjoint_triple_walking_arrow(arrow):
    pb = slices.Pullbacks(arrow)
    for f in arrow.morphisms:
        ctx = slices.SliceContext(arrow, arrow.dom(f), pb)
        t = slices.check_triple(ctx, f)
        assert t["sigma"].ok
        assert t["pi"] is None or t["pi"].ok


def test_dependent_product_counts():
    # Pi along 2 -> 1 of x : 4 -> 2 with fibres 2, 2 has 2 * 2 sections
    ctx = slices.slice_context(FinSetCat(4), 1).at(2)
    f = Fn(2, 1, (0, 0))
    P = slices.FinSetDependentProduct(ctx, f)
    x = Fn(4, 2, (0, 0, 1, 1))
    assert P.obj(x).dom == 4


def test_lcc_clauses():
    for C in (FinSetCat(2),):
        r = slices.is_lcc(C)
        assert r["clause1"] and r["clause2"] and r["clause3"] and r["agree"]


def test_lcc_walking_arrow(arrow):
    r = slices.is_lcc(arrow)
    assert r["agree"] and r["clause1"]


def test_crafted_category_without_pullbacks():
    C = load("cospan_plus_point.catspec")
    pb = slices.Pullbacks(C)
    assert not pb.exists("f", "g")
    with pytest.raises(MissingPullback):
        pb("f", "g")
    r = slices.is_lcc(C)
    assert not r["clause1"] and not r["clause2"] and not r["clause3"]
    assert r["agree"] and not r["terminal"]


def test_crafted_slice_product_missing():
    C = load("cospan_plus_point.catspec")
    rep = slices.slice_report(slices.SliceContext(C, "c", slices.Pullbacks(C)))
    assert not rep.products
    assert rep.products.counterexample["missing"] == "pullback"


def test_pullback_functor_is_functor(ctx2):
    f = Fn(1, 2, (1,))
    F = slices.pullback_functor(ctx2, f)
    assert not F.violations()
