import pytest

from catkernel import structures
from catkernel.errors import MissingExponential
from catkernel.finset import FinSetCat, FinSetStructure, Fn


@pytest.fixture(scope="module")
def fs2():
    return FinSetCat(2)


def test_finset_chosen_product_verified(fs2):
    S = FinSetStructure()
    for a in range(3):
        for b in range(3):
            v = structures.verify_product(fs2, a, b, S.product(a, b), S.pi1(a, b), S.pi2(a, b))
            assert v, (a, b, v.counterexample)


def test_wrong_projection_rejected(fs2):
    S = FinSetStructure()
    v = structures.verify_product(fs2, 2, 2, 4, S.pi1(2, 2), S.pi1(2, 2))
    assert not v
    assert v.counterexample["mediators"] != 1


def test_finset_pullback_and_equalizer(fs2):
    S = FinSetStructure()
    f1, f2 = Fn(2, 2, (0, 1)), Fn(2, 2, (1, 1))
    n, p1, p2 = S.pullback(f1, f2)
    assert n == 2
    assert structures.verify_pullback(fs2, f1, f2, n, p1, p2)
    f, g = Fn(2, 2, (0, 1)), Fn(2, 2, (0, 0))
    E, e = S.equalizer(f, g)
    assert E == 1 and structures.verify_equalizer(fs2, f, g, E, e)


def test_searched_exponentials_verified(zoo):
    C = zoo["comm_square"]
    cs = structures.choose_cartesian_structure(C)
    assert cs.is_ccc
    for (a2, a1), w in cs.exponentials.items():
        assert structures.verify_exponential(C, cs.product_witness, a2, a1, w.apex, w.ev)


def test_exp_cap():
    S = FinSetStructure(exp_cap=4)
    assert S.exp(2, 2) == 4
    with pytest.raises(MissingExponential):
        S.exp(2, 3)


def test_search_arrow(arrow):
    assert structures.find_terminals(arrow) == ["b"]
    assert structures.find_initials(arrow) == ["a"]
    w = structures.find_product(arrow, "a", "b")
    assert w.apex == "a"
    cs = structures.choose_cartesian_structure(arrow)
    assert cs.is_ccc


def test_parallel_pair_has_no_equalizer(zoo):
    C = zoo["parallel_pair"]
    f, g = [m for m in C.morphisms if not C.is_identity(m)]
    assert structures.find_equalizers(C, f, g) == []
    assert structures.find_equalizers(C, f, f)


def test_discrete_has_no_products(zoo):
    C = zoo["discrete_2"]
    a, b = C.objects
    assert structures.find_product(C, a, b) is None
    assert structures.find_terminal(C) is None


def test_cartesian_monoidal_on_poset(zoo):
    C = zoo["comm_square"]
    M = structures.MonoidalStructure.from_cartesian(structures.choose_cartesian_structure(C))
    rep = structures.validate_monoidal(M)
    assert rep.laws.ok and rep.symmetric


def test_exponent_flags(zoo):
    cs = structures.choose_cartesian_structure(zoo["walking_arrow"])
    assert all(cs.exponentiating(b) and cs.exponentiable(b) for b in ("a", "b"))
    cs = structures.choose_cartesian_structure(zoo["parallel_pair"])
    assert not cs.has_binary_products and not cs.exponentiating("a")


def test_c2_has_no_products(zoo):
    cs = structures.choose_cartesian_structure(zoo["c2"])
    assert not cs.has_finite_products
    assert structures.find_terminals(zoo["c2"]) == []


def test_pushout_by_duality():
    from catkernel.finset import FinSetCat, Fn
    C = FinSetCat(4)
    e1, e2 = Fn(0, 1, ()), Fn(0, 2, ())
    ws = structures.find_pushouts(C, e1, e2, limit=1)
    assert ws and ws[0].apex == 3


def test_equalizer_examples():
    from catkernel.finset import FinSetCat, Fn
    C = FinSetCat(2)
    idm, sw = Fn(2, 2, (0, 1)), Fn(2, 2, (1, 0))
    assert structures.find_equalizers(C, idm, idm, limit=1)[0].apex == 2
    assert structures.find_equalizers(C, idm, sw, limit=1)[0].apex == 0
