import pytest

from catkernel import core, fibration
from catkernel.catspec import build_functor, load_category, parse_catspec
from catkernel.finset import FinSetCat

from conftest import DATA, load


@pytest.fixture(scope="module")
def cod2():
    return fibration.codomain_fibration(FinSetCat(2))


@pytest.fixture(scope="module")
def cleavage2(cod2):
    return fibration.make_cleavage(cod2)


def test_codomain_is_bifibration(cod2):
    assert fibration.is_fibration(cod2)
    assert fibration.is_opfibration(cod2)
    assert fibration.is_bifibration(cod2)


def test_codomain_cleavage_not_split(cleavage2):
    v = cleavage2.split()
    assert not v and v.counterexample


def test_codomain_opcleavage_split(cod2):
    assert fibration.make_cleavage(cod2, "opcartesian").split()


def test_fibre_is_slice(cod2):
    C = FinSetCat(2)
    for X in range(3):
        assert fibration.fibre_slice_isomorphism(cod2, C, X)
    assert fibration.fibre_slice_iso_search(cod2, C, 1)


def test_reindex_is_pullback(cod2, cleavage2):
    C = FinSetCat(2)
    op = fibration.make_cleavage(cod2, "opcartesian")
    for f in C.morphisms:
        assert fibration.reindex_vs_pullback(cod2, cleavage2, f)
        assert fibration.opreindex_vs_sigma(cod2, op, f)


def test_reindex_functorial(cleavage2):
    C = FinSetCat(2)
    for f in list(C.morphisms)[:6]:
        assert fibration.reindex_functoriality(cleavage2, f) == []


def test_codomain_fibred_structure(cod2, cleavage2):
    s = fibration.fibred_structure(cod2, cleavage2)
    assert s["fibred_terminal"] and s["fibred_product"] and s["fibred_exponent"]


def test_codomain_factorizations(cod2, cleavage2):
    assert fibration.factorizations(cod2, cleavage2)


def test_codomain_products(cod2, cleavage2):
    p = fibration.fibration_products(cod2, cleavage2)
    assert p["has_product_adjoints"] and p["has_simple_product_adjoints"]
    assert p["beck_chevalley"] == "unchecked"


def test_predicate_fibration_polymorphic():
    prof = fibration.fibration_profile(fibration.predicate_fibration(2))
    assert prof.fibration and prof.split and prof.polymorphic and prof.partial_order
    assert prof.fibration_exponent == "unsupported"
    P = fibration.predicate_fibration(2)
    gens = fibration.generic_objects(P, fibration.make_cleavage(P))
    assert any(g.strong_generic and g.split_generic for g in gens)


def test_codomain_has_no_generic_object(cod2, cleavage2):
    assert not any(g.generic for g in fibration.generic_objects(cod2, cleavage2))


def test_lemma_on_test_set(arrow, cod2):
    fibs = [fibration.identity_fibration(arrow), cod2,
            fibration.predicate_fibration(2),
            fibration.constant_fibration(arrow, load("point.catspec"), "o")]
    for U in fibs:
        assert fibration.check_faithful_preorder_lemma(U)["agree"], U.name


def test_lemma_values(cod2):
    r = fibration.check_faithful_preorder_lemma(cod2)
    assert r == {"faithful": False, "partial_order": False, "agree": True}


def test_non_fibration():
    # the inclusion of {a} into the walking arrow: f has no lifting at a
    spec = parse_catspec("object a\nfunctor U\n obj a |-> b\nend\n")
    E = load_category(spec)
    B = load("arrow.catspec")
    U = build_functor(spec.functors["U"], E, B)
    assert not fibration.is_fibration(U)
    prof = fibration.fibration_profile(U)
    assert not prof.fibration and not prof.cloven


def test_fibre_category(cod2):
    F = fibration.fibre(cod2, 1)
    assert len(F.category.objects) == 3


def test_codomain_search_fails_on_truncated_total(cod2):
    # without the chosen pullbacks, liftings whose apex exceeds max_size are missing
    bare = fibration.Fibration(cod2.functor, name="cod-search")
    assert not fibration.is_fibration(bare)
