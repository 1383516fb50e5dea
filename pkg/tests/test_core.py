import pytest

from catkernel import core
from catkernel.catspec import load_category
from catkernel.errors import BrokenUnit, DanglingId, NonAssociative, NotComposable, UnknownObject
from catkernel.finset import FinSetCat, Fn, all_functions, compose, identity


def test_fincategory_tables(arrow):
    assert list(arrow.objects) == ["a", "b"]
    assert arrow.hom("a", "b") == ("f",)
    assert arrow.compose("f", arrow.identity("a")) == "f"
    assert arrow.compose(arrow.identity("b"), "f") == "f"
    assert not arrow.violations()


def test_not_composable(arrow):
    with pytest.raises(NotComposable):
        arrow.compose("f", "f")


def test_unknown_object():
    with pytest.raises(UnknownObject):
        core.FinCategory(["a"], {"f": ("a", "z")}, {"a": "f"}, {})


def test_dangling_identity():
    with pytest.raises(DanglingId):
        core.FinCategory(["a"], {}, {"a": "ida"}, {})


def test_nonassociative_detected():
    objs = ["a"]
    mors = {"i": ("a", "a"), "e": ("a", "a"), "k": ("a", "a")}
    comp = {("i", "i"): "i"}
    for x in ("e", "k"):
        comp[("i", x)] = comp[(x, "i")] = x
    comp.update({("e", "e"): "k", ("e", "k"): "e", ("k", "e"): "k", ("k", "k"): "k"})
    with pytest.raises(NonAssociative):
        core.FinCategory(objs, mors, {"a": "i"}, comp)


def test_opposite_swaps(arrow):
    op = core.opposite(arrow)
    assert op.dom("f") == "b" and op.cod("f") == "a"
    assert not op.violations()


def test_slice_over_terminal_of_arrow(arrow):
    S = core.slice_category(arrow, "b")
    assert len(S.objects) == 2
    assert not S.violations()


def test_arrow_category_valid():
    A = core.arrow_category(FinSetCat(1))
    assert not A.violations()


def test_product_category_counts(arrow):
    P = core.product_category(arrow, arrow)
    assert len(P.objects) == 4 and len(list(P.morphisms)) == 9


def test_comma_is_slice(arrow):
    F = core.identity_functor(arrow)
    G = core.constant_functor(core.FinCategory(["*"], {"i": ("*", "*")}, {"*": "i"}, {("i", "i"): "i"}),
                              arrow, "b")
    K = core.comma_category(F, G)
    assert len(K.objects) == len(core.slice_category(arrow, "b").objects)


def test_functor_enumeration_arrow_to_arrow(arrow):
    fs = list(core.enumerate_functors(arrow, arrow))
    assert len(fs) == 3


def test_isomorphism_search(zoo):
    assert core.is_isomorphic(zoo["walking_iso"], zoo["walking_iso"])
    assert not core.is_isomorphic(zoo["walking_iso"], zoo["walking_arrow"])


def test_materialize_finset():
    C = FinSetCat(2).materialize()
    assert len(C.morphisms) == 1 + 1 + 1 + 1 + 1 + 2 + 4
    assert not C.violations()


def test_finset_basic_ops():
    f = Fn(2, 3, (0, 2))
    g = Fn(3, 1, (0, 0, 0))
    assert compose(g, f) == Fn(2, 1, (0, 0))
    assert compose(f, identity(2)) == f
    assert len(all_functions(3, 2)) == 8
    assert FinSetCat(2).hom_count(3, 2) == 8


def test_catspec_roundtrip(zoo):
    from catkernel.catspec import to_catspec
    for C in zoo.values():
        D = load_category(to_catspec(C))
        assert core.is_isomorphic(C, D)
